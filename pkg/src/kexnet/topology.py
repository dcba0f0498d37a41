"""Network geometries, hardware inventories, and asymptotic cost classes.

Hosts are numbered 1..N. The four supported geometries differ in how many
key exchangers each host carries and whether a center switch is present:

* FCN_FULL   -- fully connected, N-1 exchangers per host
* FCN_SINGLE -- fully connected, 1 exchanger per host
* LCH        -- linear chain (bus), 2 exchangers per host
* STAR       -- hub and spoke, 1 exchanger per host plus a center switch
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidSizeError


class TopologyKind(str, Enum):
    FCN_FULL = "fcn-full"
    FCN_SINGLE = "fcn1"
    LCH = "lch"
    STAR = "star"


class ComplexityClass(str, Enum):
    O1 = "O(1)"
    ON = "O(N)"
    ON2 = "O(N^2)"


class CostMetric(str, Enum):
    CABLE = "cable"
    KE = "ke"
    TIME = "time"


# Asymptotic growth of cable count, exchanger count, and full-exchange time.
_COMPLEXITY: dict[TopologyKind, dict[CostMetric, ComplexityClass]] = {
    TopologyKind.FCN_FULL: {
        CostMetric.CABLE: ComplexityClass.ON2,
        CostMetric.KE: ComplexityClass.ON2,
        CostMetric.TIME: ComplexityClass.O1,
    },
    TopologyKind.FCN_SINGLE: {
        CostMetric.CABLE: ComplexityClass.ON2,
        CostMetric.KE: ComplexityClass.ON,
        CostMetric.TIME: ComplexityClass.ON,
    },
    TopologyKind.LCH: {
        CostMetric.CABLE: ComplexityClass.ON,
        CostMetric.KE: ComplexityClass.ON,
        CostMetric.TIME: ComplexityClass.ON2,
    },
    TopologyKind.STAR: {
        CostMetric.CABLE: ComplexityClass.ON,
        CostMetric.KE: ComplexityClass.ON,
        CostMetric.TIME: ComplexityClass.ON,
    },
}


@dataclass(frozen=True)
class NetworkTopology:
    """A concrete network: geometry kind plus host count.

    ``exchangers_per_host`` and ``has_center_switch`` are derived from the
    kind and stored for convenience; use :func:`build_topology` to construct.
    """

    kind: TopologyKind
    n_hosts: int
    exchangers_per_host: int
    has_center_switch: bool

    def hosts(self) -> range:
        """1-based host indices."""
        return range(1, self.n_hosts + 1)


@dataclass(frozen=True)
class CostProfile:
    """Concrete hardware counts and asymptotic classes for one topology."""

    cable_count: int
    exchanger_count: int
    center_switch_count: int
    class_cable: ComplexityClass
    class_ke: ComplexityClass
    class_time: ComplexityClass


def _exchangers_per_host(kind: TopologyKind, n: int) -> int:
    if kind is TopologyKind.FCN_FULL:
        return n - 1
    if kind is TopologyKind.LCH:
        return 2
    return 1


def build_topology(kind: TopologyKind, n: int) -> NetworkTopology:
    """Build a topology of ``kind`` with ``n`` hosts.

    Raises InvalidSizeError for n < 2.
    """
    if n < 2:
        raise InvalidSizeError(f"a network needs at least 2 hosts, got {n}")
    return NetworkTopology(
        kind=kind,
        n_hosts=n,
        exchangers_per_host=_exchangers_per_host(kind, n),
        has_center_switch=kind is TopologyKind.STAR,
    )


def cost_profile(t: NetworkTopology) -> CostProfile:
    """Cable, exchanger, and center-switch counts with their growth classes.

    Both fully connected variants need N(N-1)/2 cables; the chain needs one
    cable per segment and the star one spoke per host (the center switch is
    counted separately).
    """
    n = t.n_hosts
    if t.kind is TopologyKind.FCN_FULL:
        cables, kes = n * (n - 1) // 2, n * (n - 1)
    elif t.kind is TopologyKind.FCN_SINGLE:
        cables, kes = n * (n - 1) // 2, n
    elif t.kind is TopologyKind.LCH:
        cables, kes = n - 1, 2 * n
    else:
        cables, kes = n, n
    return CostProfile(
        cable_count=cables,
        exchanger_count=kes,
        center_switch_count=1 if t.has_center_switch else 0,
        class_cable=complexity_class(t.kind, CostMetric.CABLE),
        class_ke=complexity_class(t.kind, CostMetric.KE),
        class_time=complexity_class(t.kind, CostMetric.TIME),
    )


def complexity_class(kind: TopologyKind, metric: CostMetric | str) -> ComplexityClass:
    """Asymptotic class of a cost metric for a topology kind."""
    return _COMPLEXITY[kind][CostMetric(metric)]


def add_host(t: NetworkTopology) -> NetworkTopology:
    """The same geometry with one more host; all derived counts follow."""
    return build_topology(t.kind, t.n_hosts + 1)
