import importlib.metadata as mtd


try:
    __version__ = mtd.version("ualgebra")
except mtd.PackageNotFoundError:
    # Running from a source checkout
    __version__ = "0.1.0"
