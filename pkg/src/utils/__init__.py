from .errors import RingAnalysisError
from .error_handler import error_handler
from .monitoring import monitoring

__all__ = ['RingAnalysisError', 'error_handler', 'monitoring']
