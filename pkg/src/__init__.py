"""kappa-entanglement and exact PPT entanglement cost toolkit"""

__version__ = "0.1.0"
