"""scikit-learn style front ends.

``fit`` takes the language L (a LanguageSpec, a Dfa or a list of words)
and builds the automaton for the chosen predicate.  ``predict`` and
``transform`` then take words of the alphabet, one per sample.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .automata import star_dfa
from .oracle import _summaries, as_oracle, check_predicate, count_factorizations
from .su import build_su_counter_machine
from .uf import uf_dfa
from .ufp import build_ufp_counter_machine
from .ufs import ufs_dfa
from .validation import check_language, check_words, language_dfa

ENGINES = ("construction", "oracle")


class FactorizationClassifier(ClassifierMixin, BaseEstimator):
    """Labels each word True when it lies in L* and satisfies ``predicate``.

    With ``engine="construction"`` the decision comes from the automaton
    built for the predicate: the uf DFA, the complement machines for su and
    ufp, or the ufs DFA.  ``engine="oracle"`` uses factorization DP instead.
    ufp and ufs constructions need a finite L.
    """

    def __init__(self, predicate: str = "uf", engine: str = "construction", alphabet=None):
        self.predicate = predicate
        self.engine = engine
        self.alphabet = alphabet

    def fit(self, X, y=None):
        check_predicate(self.predicate)
        if self.engine not in ENGINES:
            raise ValueError(f"engine must be one of {ENGINES}, got {self.engine!r}")
        self.language_ = check_language(X, self.alphabet)
        dfa = language_dfa(self.language_)
        self.alphabet_ = dfa.alphabet
        self.classes_ = np.array([False, True])
        self.star_ = star_dfa(dfa)
        self.automaton_ = None
        if self.engine == "construction":
            if self.predicate == "uf":
                self.automaton_ = uf_dfa(dfa)
            elif self.predicate == "su":
                self.automaton_ = build_su_counter_machine(dfa)
            elif self.predicate == "ufp":
                self.automaton_ = build_ufp_counter_machine(self.language_)
            else:
                self.automaton_ = ufs_dfa(self.language_)
        return self

    def _decide(self, word) -> bool:
        if not self.star_.accepts(word):
            return False
        if self.automaton_ is None:
            return check_predicate(self.predicate)(word, self.language_)
        if self.predicate in ("su", "ufp"):
            # these machines accept the violations
            return not self.automaton_.accepts(word)
        return self.automaton_.accepts(word)

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self, "star_")
        words = check_words(X, self.alphabet_)
        return np.array([self._decide(w) for w in words], dtype=bool)


class FactorizationProfile(TransformerMixin, BaseEstimator):
    """Per-word counts of factorizations and of their distinct summaries.

    Columns: factorizations (saturated at ``saturate_at`` when given),
    distinct numbers of factors, distinct factor multisets, distinct
    factor sets.  Words outside L* get a row of zeros.
    """

    feature_names = ("n_factorizations", "n_lengths", "n_multisets", "n_supports")

    def __init__(self, saturate_at=None, alphabet=None):
        self.saturate_at = saturate_at
        self.alphabet = alphabet

    def fit(self, X, y=None):
        if self.saturate_at is not None and self.saturate_at < 1:
            raise ValueError("saturate_at must be positive")
        self.language_ = check_language(X, self.alphabet)
        self.oracle_ = as_oracle(self.language_)
        self.alphabet_ = language_dfa(self.language_).alphabet
        self.n_features_out_ = len(self.feature_names)
        return self

    def _row(self, word):
        count = count_factorizations(word, self.oracle_, self.saturate_at)
        if count == 0:
            return [0, 0, 0, 0]
        return [count] + [
            len(_summaries(word, self.oracle_, kind)) for kind in ("length", "multiset", "support")
        ]

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "oracle_")
        words = check_words(X, self.alphabet_)
        rows = [self._row(w) for w in words]
        return np.array(rows, dtype=np.int64).reshape(len(rows), self.n_features_out_)

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        return np.array(self.feature_names, dtype=object)

