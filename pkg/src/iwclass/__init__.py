"""Classification, automorphism groups and counting of integer weighing matrices."""

__version__ = "0.1.0"
