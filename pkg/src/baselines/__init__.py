from .methods import MethodTag
from .time_stopping import BurstSystem, build_burst_system, time_stopping_analysis
from .backlog_based import node_backlog_bounds, backlog_based_analysis
from .wcd_lower import wcd_lower_bound

__all__ = [
    'MethodTag',
    'BurstSystem',
    'build_burst_system',
    'time_stopping_analysis',
    'node_backlog_bounds',
    'backlog_based_analysis',
    'wcd_lower_bound',
]
