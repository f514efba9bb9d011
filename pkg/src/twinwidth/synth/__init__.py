"""Constructive sequence synthesizers; every output is replayed and checked against its bound."""
from .adhesion import adhesion_pipeline, compose_adhesion, contract_tilde_bounded
from .blocks import compose_blocks
from .gadget_chain import hat_from_torso, red_torso_of, tilde_to_hat
from .lifts import apex_lift, avoid_vertex_lift, respect_lift, restrict_sequence
from .strong_tree import strong_tree_contract
from .tracker import PartTracker

__all__ = [
    "PartTracker", "adhesion_pipeline", "apex_lift", "avoid_vertex_lift", "compose_adhesion",
    "compose_blocks", "contract_tilde_bounded", "hat_from_torso", "red_torso_of", "respect_lift",
    "restrict_sequence", "strong_tree_contract", "tilde_to_hat",
]
