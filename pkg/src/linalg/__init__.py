from .dense import DenseMatrix, matmul, solve, determinant

__all__ = ['DenseMatrix', 'matmul', 'solve', 'determinant']
