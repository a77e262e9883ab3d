import logging
from typing import Callable, Any, Dict, Optional, Tuple, Type
import traceback
from functools import wraps

from utils.errors import (
    Infeasible,
    NetworkParseError,
    NetworkValidationError,
    ReportWriteError,
    UnstableNode,
    DegenerateRing,
)

# CLI exit codes
EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 2


class ErrorHandler:
    """Centralized error handling for the ring analysis tools."""

    def __init__(self):
        """Initialize the ErrorHandler."""
        self.logger = logging.getLogger(__name__)

    def handle_error(self, error: Exception, context: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """Handle an exception and return an error response dictionary.

        Args:
            error: The exception that occurred
            context: Optional context about where/when the error occurred

        Returns:
            Dict containing error details and user-friendly message
        """
        error_type = type(error).__name__
        error_message = str(error)

        # Infeasibility is an analysis verdict, not a fault
        if isinstance(error, Infeasible):
            self.logger.info(f"Infeasible: {error_type}: {error_message}")
            stack_trace = ""
        else:
            stack_trace = traceback.format_exc()
            self.logger.error(f"Error type: {error_type}")
            self.logger.error(f"Error message: {error_message}")
            self.logger.debug(f"Stack trace: {stack_trace}")
        if context:
            self.logger.debug(f"Error context: {context}")

        return {
            "status": "infeasible" if isinstance(error, Infeasible) else "error",
            "error_type": error_type,
            "error_message": error_message,
            "user_message": self.get_user_friendly_message(error),
            "exit_code": self.exit_code(error),
            "context": context or {},
            "stack_trace": stack_trace
        }

    def with_error_handling(self, fallback_return: Any = None,
                            errors: Tuple[Type[BaseException], ...] = (Exception,)):
        """Decorator for functions that need standardized error handling.

        Args:
            fallback_return: Value to return if an error occurs
            errors: Exception types turned into a response; others propagate

        Returns:
            Decorated function with error handling
        """
        def decorator(func: Callable):
            @wraps(func)
            def wrapper(*args, **kwargs):
                try:
                    return func(*args, **kwargs)
                except errors as e:
                    error_response = self.handle_error(e, {
                        "function": func.__name__,
                        "args": str(args),
                        "kwargs": str(kwargs)
                    })
                    return fallback_return if fallback_return is not None else error_response
            return wrapper
        return decorator

    def exit_code(self, error: Exception) -> int:
        """Map an exception to the CLI exit code.

        Args:
            error: The exception that ended the command

        Returns:
            2 for infeasible networks, 1 for any other error
        """
        if isinstance(error, Infeasible):
            return EXIT_INFEASIBLE
        return EXIT_ERROR

    def get_user_friendly_message(self, error: Exception) -> str:
        """Convert an exception into a message for the operator.

        Args:
            error: The exception to describe

        Returns:
            A user-friendly error message string
        """
        if isinstance(error, NetworkParseError):
            return f"The network file could not be read: {error}"

        if isinstance(error, NetworkValidationError):
            where = f" (field '{error.field}')" if error.field else ""
            return f"The network description is invalid{where}: {error}"

        if isinstance(error, Infeasible):
            return f"No finite delay bound exists for this network: {error}"

        if isinstance(error, (UnstableNode, DegenerateRing)):
            return f"Invalid analysis parameters: {error}"

        if isinstance(error, ReportWriteError):
            return f"The report could not be written: {error}"

        if isinstance(error, FileNotFoundError):
            return f"File not found: {error.filename}"

        if isinstance(error, ValueError):
            return f"Invalid input or configuration: {error}"

        # Default user-friendly message for unknown errors
        return "An unexpected error occurred. Run with --verbose for details."

# Create a singleton instance
error_handler = ErrorHandler()
