"""
ToughCycles - Lazily measured graph

One graph, many questions: toughness, cycles, closures and spectra are
computed on first use and reused by every later check.
"""
from fractions import Fraction
from functools import cached_property
from typing import Dict, Optional, Tuple

from . import config
from .closure import ClosureResult, bondy_chvatal_closure
from .cycles import CycleSpectrum, cycle_spectrum, is_hamiltonian, is_pancyclic
from .graph_core import DegreeSequence, Graph, degree_sequence, is_bipartite
from .spectral import SpectralEstimate, adjacency_spectral_radius, signless_laplacian_radius
from .toughness import Rational, ToughnessValue, find_toughness_violation, toughness_with_witness


class GraphProbe:
    def __init__(
        self, g: Graph, tol: float = config.DEFAULT_TOL, allow_large: bool = False, seed: int = config.DEFAULT_SEED
    ):
        self.graph = g
        self.tol = tol
        self.allow_large = allow_large
        self.seed = seed
        self._tough: Dict[Fraction, bool] = {}
        self._closures: Dict[int, ClosureResult] = {}

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @cached_property
    def connected(self) -> bool:
        return self.graph.is_connected()

    @cached_property
    def bipartite(self) -> bool:
        return is_bipartite(self.graph)

    @cached_property
    def degree_sequence(self) -> DegreeSequence:
        return degree_sequence(self.graph)

    @cached_property
    def toughness_with_witness(self) -> Tuple[ToughnessValue, Optional[Tuple[int, ...]]]:
        return toughness_with_witness(self.graph, self.allow_large)

    @property
    def toughness(self) -> ToughnessValue:
        return self.toughness_with_witness[0]

    def is_t_tough(self, t: Rational) -> bool:
        key = Fraction(t)
        if key not in self._tough:
            if "toughness_with_witness" in self.__dict__:
                self._tough[key] = self.toughness >= key
            else:
                self._tough[key] = find_toughness_violation(self.graph, key, self.allow_large) is None
        return self._tough[key]

    @cached_property
    def hamiltonian(self) -> bool:
        if "spectrum" in self.__dict__:
            return self.n in self.spectrum
        return is_hamiltonian(self.graph)

    @cached_property
    def pancyclic(self) -> bool:
        if "spectrum" in self.__dict__:
            return not self.spectrum.missing()
        return is_pancyclic(self.graph)

    @cached_property
    def spectrum(self) -> CycleSpectrum:
        return cycle_spectrum(self.graph)

    @cached_property
    def rho(self) -> SpectralEstimate:
        return adjacency_spectral_radius(self.graph, self.tol, self.seed)

    @cached_property
    def q(self) -> SpectralEstimate:
        return signless_laplacian_radius(self.graph, self.tol, self.seed)

    def closure(self, k: int) -> ClosureResult:
        if k not in self._closures:
            self._closures[k] = bondy_chvatal_closure(self.graph, k)
        return self._closures[k]
