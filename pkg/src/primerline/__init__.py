"""primerline: a product-line toolchain for instructional-design primers."""

__version__ = "0.1.0"
