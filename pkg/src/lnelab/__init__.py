"""lne-lab: Lipschitz normal embedding of complex affine plane curves."""

__version__ = "0.1.0"
