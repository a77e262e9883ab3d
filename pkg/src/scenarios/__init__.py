from .traffic import TrafficClass, ScenarioConfig, ScenarioPoint, default_scenario, CLASSES, HRT, SRT, NRT
from .generator import build_broadcast_ring, class_of
from .loader import load_network, network_from_dict, network_to_dict, dump_network
from .report import ReportRow, emit_report, read_report, rows_to_frame
from .runner import ScenarioRunner, scenario_runner, run_scenario, find_load_frontier

__all__ = [
    'TrafficClass',
    'ScenarioConfig',
    'ScenarioPoint',
    'default_scenario',
    'CLASSES',
    'HRT',
    'SRT',
    'NRT',
    'build_broadcast_ring',
    'class_of',
    'load_network',
    'network_from_dict',
    'network_to_dict',
    'dump_network',
    'ReportRow',
    'emit_report',
    'read_report',
    'rows_to_frame',
    'ScenarioRunner',
    'scenario_runner',
    'run_scenario',
    'find_load_frontier',
]
