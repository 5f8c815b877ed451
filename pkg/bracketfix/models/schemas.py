"""
Pydantic models for tournaments, demand instances and seedings

Players are dense integer ids 0..n-1. A tournament stores, for every player, the
bitmask of opponents that player beats.
"""

from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..utils.helpers import _is_power_of_two
from .errors import InvalidTournament

Arc = Tuple[int, int]


class TournamentDigraph(BaseModel):
    """Schema for a complete tournament digraph (who beats whom)"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Number of players")
    wins: Tuple[int, ...] = Field(..., description="wins[u] is the bitmask of players u beats")

    @model_validator(mode="after")
    def _check_complete(self) -> "TournamentDigraph":
        """Exactly one of (u, v), (v, u) is an arc for every pair; no self-arcs"""
        if len(self.wins) != self.n:
            raise ValueError(f"expected {self.n} win masks, got {len(self.wins)}")
        everyone = (1 << self.n) - 1
        for u, mask in enumerate(self.wins):
            if mask & ~everyone:
                raise ValueError(f"player {u} beats a player outside 0..{self.n - 1}")
            if mask >> u & 1:
                raise ValueError(f"player {u} beats itself")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                forward = self.wins[u] >> v & 1
                backward = self.wins[v] >> u & 1
                if forward == backward:
                    raise ValueError(f"pair ({u}, {v}) needs exactly one winner")
        return self

    @classmethod
    def from_arcs(cls, n: int, arcs: Sequence[Arc]) -> "TournamentDigraph":
        """Build from an explicit list of (winner, loser) arcs"""
        wins = [0] * n
        for u, v in arcs:
            wins[u] |= 1 << v
        return cls(n=n, wins=tuple(wins))

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "TournamentDigraph":
        """Acyclic tournament where earlier players in `order` beat later ones"""
        n = len(order)
        wins = [0] * n
        for i, u in enumerate(order):
            for v in order[i + 1:]:
                wins[u] |= 1 << v
        return cls(n=n, wins=tuple(wins))

    @classmethod
    def from_matrix(cls, rows: Sequence[str]) -> "TournamentDigraph":
        """
        Build from matrix rows of '1' (row beats column), '0' (column beats row) and '-'

        Raises:
            InvalidTournament: wrong shape, bad characters or an asymmetric pair
        """
        n = len(rows)
        wins = [0] * n
        for i, row in enumerate(rows):
            if len(row) != n:
                raise InvalidTournament(f"row {i} has {len(row)} entries, expected {n}")
            for j, ch in enumerate(row):
                if i == j:
                    if ch != "-":
                        raise InvalidTournament(f"diagonal entry ({i}, {i}) must be '-'")
                    continue
                if ch == "1":
                    wins[i] |= 1 << j
                elif ch != "0":
                    raise InvalidTournament(f"entry ({i}, {j}) must be 0 or 1, got {ch!r}")
        for i in range(n):
            for j in range(i + 1, n):
                if (wins[i] >> j & 1) == (wins[j] >> i & 1):
                    raise InvalidTournament(f"entries ({i}, {j}) and ({j}, {i}) disagree")
        return cls(n=n, wins=tuple(wins))

    def to_matrix(self) -> List[str]:
        rows = []
        for i in range(self.n):
            rows.append("".join("-" if i == j else ("1" if self.beats(i, j) else "0") for j in range(self.n)))
        return rows

    def beats(self, u: int, v: int) -> bool:
        return bool(self.wins[u] >> v & 1)

    @cached_property
    def losses(self) -> Tuple[int, ...]:
        """losses[u] is the bitmask of players who beat u"""
        result = [0] * self.n
        for u, mask in enumerate(self.wins):
            v = 0
            while mask:
                if mask & 1:
                    result[v] |= 1 << u
                mask >>= 1
                v += 1
        return tuple(result)

    def arcs(self) -> List[Arc]:
        return [(u, v) for u in range(self.n) for v in range(self.n) if self.wins[u] >> v & 1]

    def with_reversed(self, arcs: Sequence[Arc]) -> "TournamentDigraph":
        """Copy of the tournament with every listed (winner, loser) arc flipped"""
        wins = list(self.wins)
        for u, v in arcs:
            if not wins[u] >> v & 1:
                raise InvalidTournament(f"({u}, {v}) is not an arc")
            wins[u] &= ~(1 << v)
            wins[v] |= 1 << u
        return TournamentDigraph(n=self.n, wins=tuple(wins))

    @property
    def is_power_of_two(self) -> bool:
        return _is_power_of_two(self.n)

    @property
    def log_n(self) -> int:
        return self.n.bit_length() - 1


class DemandInstance(BaseModel):
    """Schema for a tournament plus demanded matches, optional rounds and weights"""
    model_config = ConfigDict(frozen=True)

    tournament: TournamentDigraph = Field(..., description="Match-outcome model")
    demands: Tuple[Arc, ...] = Field(default=(), description="Demanded (winner, loser) matches")
    rounds: Optional[Dict[Arc, int]] = Field(None, description="0-based round per demand (may cover a subset)")
    weights: Optional[Dict[Arc, int]] = Field(None, description="Non-negative weight per demand")

    @model_validator(mode="after")
    def _check_players(self) -> "DemandInstance":
        n = self.tournament.n
        for u, v in self.demands:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"demand ({u}, {v}) does not name two distinct players")
        return self


class ValidatedInstance(BaseModel):
    """A demand instance that passed validate_instance"""
    model_config = ConfigDict(frozen=True)

    tournament: TournamentDigraph
    demands: FrozenSet[Arc] = Field(default_factory=frozenset)
    rounds: Dict[Arc, int] = Field(default_factory=dict)
    weights: Dict[Arc, int] = Field(default_factory=dict)
    trivially_no: bool = Field(False, description="Some player has demand in-degree > 1")

    @property
    def n(self) -> int:
        return self.tournament.n

    @property
    def log_n(self) -> int:
        return self.tournament.log_n

    @cached_property
    def sorted_demands(self) -> Tuple[Arc, ...]:
        return tuple(sorted(self.demands))

    @cached_property
    def lose(self) -> FrozenSet[int]:
        """Lose(S): players that lose some demand match"""
        return frozenset(v for _, v in self.demands)

    @cached_property
    def demand_parent(self) -> Dict[int, int]:
        """Demand parent of every player in Lose(S) (first by id when in-degree > 1)"""
        parent: Dict[int, int] = {}
        for u, v in self.sorted_demands:
            parent.setdefault(v, u)
        return parent

    @cached_property
    def demand_children(self) -> Dict[int, Tuple[int, ...]]:
        children: Dict[int, List[int]] = {}
        for u, v in self.sorted_demands:
            children.setdefault(u, []).append(v)
        return {u: tuple(vs) for u, vs in children.items()}

    def to_instance(self) -> DemandInstance:
        return DemandInstance(
            tournament=self.tournament,
            demands=self.sorted_demands,
            rounds=dict(self.rounds) or None,
            weights=dict(self.weights) or None,
        )


class Seeding(BaseModel):
    """Schema for a first-round bracket: position i meets position i XOR 1"""
    model_config = ConfigDict(frozen=True)

    order: Tuple[int, ...] = Field(..., min_length=1, description="Permutation of players 0..n-1")

    @model_validator(mode="after")
    def _check_permutation(self) -> "Seeding":
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("seeding must be a permutation of 0..n-1")
        return self

    @property
    def n(self) -> int:
        return len(self.order)

    def __str__(self) -> str:
        return " ".join(str(p) for p in self.order)


class MatchRecord(BaseModel):
    """One played match"""
    model_config = ConfigDict(frozen=True)

    winner: int = Field(..., ge=0)
    loser: int = Field(..., ge=0)
    round: int = Field(..., ge=0, description="0-based round; equals the loser's height")

    @property
    def arc(self) -> Arc:
        return (self.winner, self.loser)


class SolutionReport(BaseModel):
    """Result of checking a seeding against a demand instance"""
    model_config = ConfigDict(frozen=True)

    ok: bool
    missed: FrozenSet[Arc] = Field(default_factory=frozenset, description="Demands never played")
    round_violations: FrozenSet[Arc] = Field(
        default_factory=frozenset, description="Demands played in a round other than their pinned one"
    )


class TfInstance(BaseModel):
    """Schema for a plain Tournament Fixing instance: can `target` win?"""
    model_config = ConfigDict(frozen=True)

    tournament: TournamentDigraph
    target: int = Field(..., ge=0)

    @model_validator(mode="after")
    def _check_target(self) -> "TfInstance":
        if self.target >= self.tournament.n:
            raise ValueError(f"target {self.target} is not a player")
        return self


class FeedbackStructure(BaseModel):
    """A feedback arc set F with its strength order sigma (strongest first)"""
    model_config = ConfigDict(frozen=True)

    arcs: FrozenSet[Arc] = Field(default_factory=frozenset, description="Upset arcs, as (winner, loser)")
    sigma: Tuple[int, ...] = Field(..., description="Players from strongest to weakest")

    @property
    def k(self) -> int:
        return len(self.arcs)

    @cached_property
    def feedback_vertices(self) -> FrozenSet[int]:
        """V(F): endpoints of feedback arcs"""
        return frozenset(x for arc in self.arcs for x in arc)

    @cached_property
    def heads(self) -> FrozenSet[int]:
        """Lose(F): players that lose a feedback arc"""
        return frozenset(v for _, v in self.arcs)

    @cached_property
    def rank(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.sigma)}
