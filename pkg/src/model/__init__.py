from .ring import ring_add, ring_sub, ring_distance
from .network import Node, Flow, FlowId, InterfererCategory, RingNetwork

__all__ = [
    'ring_add',
    'ring_sub',
    'ring_distance',
    'Node',
    'Flow',
    'FlowId',
    'InterfererCategory',
    'RingNetwork',
]
