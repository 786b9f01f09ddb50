"""Ground-truth nests from flags, compared against the arrangement-based enumeration."""

from pydantic import BaseModel

from ..arrangements.building import BuildingSet
from ..arrangements.nests import Nest, enumerate_flags, enumerate_nests, nests_from_flags
from ..config import DEFAULT_SETTINGS, Settings


def nest_oracle(bs: BuildingSet, settings: Settings = DEFAULT_SETTINGS) -> list[Nest]:
    """Nests induced by every flag of the arrangement, ordered like enumerate_nests."""
    found = nests_from_flags(bs, settings.arrangement_cap)
    nests = [Nest.of(bs, names) for names in found]
    return sorted(nests, key=lambda n: (len(n), [bs.names.index(m) for m in n.members]))


class NestAgreement(BaseModel):
    flags: int
    oracle: list[list[str]]
    enumerated: list[list[str]]

    @property
    def agree(self) -> bool:
        return self.oracle == self.enumerated


def compare_nests(bs: BuildingSet, cap: int | None = None, settings: Settings = DEFAULT_SETTINGS) -> NestAgreement:
    oracle = nest_oracle(bs, settings)
    enumerated = enumerate_nests(bs, cap=cap if cap is not None else settings.nest_cap)
    return NestAgreement(
        flags=len(enumerate_flags(bs, settings.arrangement_cap)),
        oracle=[list(n.members) for n in oracle],
        enumerated=[list(n.members) for n in enumerated],
    )
