"""Rewriting-based construction of free regular *-semigroups over finite unambiguous semigroups."""
from .semigroup import ONE, ParseError, AssociativityError, Semigroup, SemigroupError, from_table, load_semigroup, read_semigroup
from .green import GreenData, compute_green, is_unambiguous
from .representatives import RepChoice, choose_representatives, validate_representatives
from .rewrite import KERNEL_BACKEND, Kind, Redex, RewriteSystem, RuleId, Sym, ZERO, involution

__version__ = "0.1.0"
