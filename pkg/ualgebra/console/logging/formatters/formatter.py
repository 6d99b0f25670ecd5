class Formatter:
    def format(self, msg: str) -> str:
        raise NotImplementedError()
