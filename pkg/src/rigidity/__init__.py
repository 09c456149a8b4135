"""Degrees of rigidity for finite relational structures and monadic profiles."""

from .combinators import compose, disjoint_union, rename_apart
from .degrees import Tetrad, WitnessReport, dcl, deg, deg_rel, ind_rig, is_sem_rigid, is_synt_rigid, rigiditize, tetrad
from .extnat import INF, OMEGA
from .monadic import AtomClass, MonadicProfile, profile_ind, profile_tetrad, realize_pair
from .permgroup import PermGroup
from .structures import FiniteStructure, Signature, StructureError, gen_family, parse_family

__all__ = [
    "AtomClass",
    "FiniteStructure",
    "INF",
    "MonadicProfile",
    "OMEGA",
    "PermGroup",
    "Signature",
    "StructureError",
    "Tetrad",
    "WitnessReport",
    "compose",
    "dcl",
    "deg",
    "deg_rel",
    "disjoint_union",
    "gen_family",
    "ind_rig",
    "is_sem_rigid",
    "is_synt_rigid",
    "parse_family",
    "profile_ind",
    "profile_tetrad",
    "realize_pair",
    "rename_apart",
    "tetrad",
]
