def test_identity_holds(app_tester, fixture_dir):
    status = app_tester.execute(
        f'check-identity {fixture_dir("diamond.alg")} --lhs "join(x,y)" --rhs "join(y,x)"'
    )

    assert status == 0
    assert app_tester.io.fetch_output() == "join(x,y) ≈ join(y,x) holds in diamond\n"


def test_identity_fails_with_counterexample(app_tester, fixture_dir):
    status = app_tester.execute(
        f'check-identity {fixture_dir("directoid4.alg")}'
        ' --lhs "join(join(x,y),z)" --rhs "join(x,join(y,z))"'
    )

    assert status == 1
    assert app_tester.io.fetch_output() == (
        "join(join(x,y),z) ≈ join(x,join(y,z)) fails in directoid4\n"
        "  counterexample: x=0 y=1 z=2\n"
    )


def test_identity_with_unknown_symbol(app_tester, fixture_dir):
    status = app_tester.execute(
        f'check-identity {fixture_dir("diamond.alg")} --lhs "meet(x,y)" --rhs "x"'
    )

    assert status == 2
    assert 'Unknown operation symbol "meet"' in app_tester.io.fetch_error()


def test_identity_needs_both_sides(app_tester, fixture_dir):
    status = app_tester.execute(
        f'check-identity {fixture_dir("diamond.alg")} --lhs "x"'
    )

    assert status == 2
    assert 'The "--rhs" option is required' in app_tester.io.fetch_error()
