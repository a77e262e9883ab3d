from enum import Enum


class MethodTag(Enum):
    """Delay analysis methods compared in the reports."""
    RING_PMOO = "RING_PMOO"
    TIME_STOPPING = "TIME_STOPPING"
    BACKLOG_BASED = "BACKLOG_BASED"
    WCD_LOWER = "WCD_LOWER"

    @classmethod
    def parse(cls, value: str) -> "MethodTag":
        """Accept tags case-insensitively, with dashes or underscores."""
        try:
            return cls[value.strip().upper().replace("-", "_")]
        except KeyError:
            choices = ", ".join(tag.value for tag in cls)
            raise ValueError(f"unknown method '{value}', expected one of {choices}") from None
