"""Factorization analysis for regular and finite languages.

Decides and enumerates unique (uf), semi-unique (su), permutationally
unique (ufp) and subset-invariant (ufs) factorization, each through an
automaton construction cross-checked against a brute-force oracle.
"""

from .automata import (
    Dfa,
    LanguageSpec,
    Nfa,
    compile_regex,
    determinize,
    enumerate_slice,
    equivalent,
    minimize,
    shortest_accepted,
    to_dot,
)
from .errors import (
    EpsilonInLanguageError,
    FactorlangError,
    NotInStarError,
    SpecFormatError,
)
from .estimators import FactorizationClassifier, FactorizationProfile
from .oracle import (
    count_factorizations,
    factorizations,
    is_su,
    is_uf,
    is_ufp,
    is_ufs,
    shortest_violation,
    slice_by_predicate,
)
from .su import build_su_counter_machine, su_gap_exists
from .uf import build_double_nfa, is_code, matrix_uf_dfa, uf_dfa
from .ufp import build_ufp_counter_machine
from .ufs import build_ufs_nfa, shortest_ufs_violation, ufs_dfa

__version__ = "0.1.0"
