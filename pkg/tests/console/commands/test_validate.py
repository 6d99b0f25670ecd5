def test_validate(app_tester, fixture_dir):
    status = app_tester.execute(f"validate {fixture_dir('diamond.alg')}")

    assert status == 0
    assert app_tester.io.fetch_output() == (
        "diamond is valid: 4 elements, 1 operation(s)\n  - join of arity 2\n"
    )


def test_validate_reports_violations(app_tester, fixture_dir):
    status = app_tester.execute(f"validate {fixture_dir('out_of_range.alg')}")

    assert status == 1
    assert app_tester.io.fetch_output() == ""
    assert "op f: entry out of range: 7 at index 3" in app_tester.io.fetch_error()


def test_validate_syntax_errors(app_tester, fixture_dir):
    status = app_tester.execute(f"validate {fixture_dir('syntax_error.alg')}")

    assert status == 2
    assert 'line 2, column 6: expected a size, got "two"' in app_tester.io.fetch_error()


def test_validate_missing_file(app_tester, tmp_path):
    status = app_tester.execute(f"validate {tmp_path / 'missing.alg'}")

    assert status == 2
    assert "does not exist" in app_tester.io.fetch_error()
