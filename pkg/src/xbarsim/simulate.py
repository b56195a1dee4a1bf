"""Event-level evaluation of a placement.

Spike trains drive pre-synaptic neurons; every spike reaches each of the
neuron's synapses after that cell's path latency, so cells with unequal
latency skew the inter-spike intervals seen downstream (ISI distortion).
The energy ledger charges leakage on the active array shape, per-spike and
per-hop constants, and the wordline-raise overhead of driving isolation
transistors when a far-region cell is accessed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .crossbar import (
    CONFIG_11,
    HRS,
    LRS1,
    Configuration,
    CrossbarSpec,
    config_dimensions,
    static_energy_weight,
)
from .errors import (
    EmptyCounts,
    EmptyPlacement,
    NegativeActivity,
    TooFewSpikes,
    UnknownNeuron,
    ValidationError,
)
from .mapper import CrossbarPlacement, Placement
from .techmodel import PathLatency, TechnologyParams, line_tap_delay, path_latency, sense_latency
from .workload import SpikeTrain


@dataclass(frozen=True)
class IFNeuron:
    """Integrate-and-fire neuron with linear leak and reset-to-zero."""

    v_threshold: float = 1.0
    v_increment_per_state: dict = field(default_factory=dict)
    leak_per_second: float = 0.0
    refractory: float = 0.0

    def __post_init__(self):
        if self.v_threshold <= 0:
            raise ValidationError("threshold must be positive")
        if any(v <= 0 for v in self.v_increment_per_state.values()):
            raise ValidationError("increments must be positive")
        if self.leak_per_second < 0 or self.refractory < 0:
            raise ValidationError("leak and refractory must be >= 0")


def default_if_neuron(tech: TechnologyParams) -> IFNeuron:
    """Default neuron: increments scale with state conductance, LRS1 -> 0.8."""
    lrs1 = tech.state(LRS1).resistance
    increments = {s.label: 0.8 * lrs1 / s.resistance for s in tech.states}
    return IFNeuron(v_threshold=1.0, v_increment_per_state=increments)


@dataclass(frozen=True)
class LatencyStats:
    best: float
    worst: float
    diff: float
    ratio: float  # best / worst
    mean: float

    @classmethod
    def from_values(cls, values) -> "LatencyStats":
        arr = np.asarray(values, dtype=float)
        if arr.size == 0:
            raise EmptyPlacement("no latency samples")
        best, worst = float(arr.min()), float(arr.max())
        return cls(best=best, worst=worst, diff=worst - best,
                   ratio=best / worst if worst > 0 else 1.0, mean=float(arr.mean()))


@dataclass(frozen=True)
class EnergyReport:
    static_j: float
    spike_j: float
    routing_j: float
    access_overhead_j: float

    @property
    def total_j(self) -> float:
        return self.static_j + self.spike_j + self.routing_j + self.access_overhead_j


@dataclass(frozen=True)
class Activity:
    """Aggregate activity over one observation window."""

    spike_counts: dict        # pre-neuron id -> spike count
    routed_spike_hops: float  # total routed spikes x hops
    duration: float

    def __post_init__(self):
        if self.duration <= 0:
            raise NegativeActivity(f"duration must be positive, got {self.duration}")
        if self.routed_spike_hops < 0 or any(v < 0 for v in self.spike_counts.values()):
            raise NegativeActivity("spike and hop counts must be >= 0")

    @property
    def total_spikes(self) -> int:
        return int(sum(self.spike_counts.values()))


def activity_from_trains(trains, routes, duration: float) -> Activity:
    counts = {t.neuron: len(t.times) for t in trains if t.times}
    hops = sum(counts.get(r.src_neuron, 0) * r.hops for r in routes)
    return Activity(spike_counts=counts, routed_spike_hops=float(hops), duration=duration)


# ---------------------------------------------------------------------------
# inter-spike intervals


def compute_isi(train: SpikeTrain) -> float:
    """Average inter-spike interval of the train."""
    times = train.times
    if len(times) < 2:
        raise TooFewSpikes(f"neuron {train.neuron}: ISI needs >= 2 spikes, got {len(times)}")
    gaps = [b - a for a, b in zip(times, times[1:])]
    return sum(gaps) / (len(times) - 1)


def isi_distortion(input_train: SpikeTrain, output_train: SpikeTrain) -> float:
    """Absolute change of average ISI between input and output trains."""
    return abs(compute_isi(output_train) - compute_isi(input_train))


# ---------------------------------------------------------------------------
# propagation


@dataclass(frozen=True)
class ArrivalTrain:
    crossbar_id: int
    synapse_index: int
    pre: int
    post: int
    state: str
    times: tuple[float, ...]


def _synapse_latency(xb: CrossbarPlacement, synapse, tech: TechnologyParams) -> PathLatency:
    return path_latency(synapse.row, synapse.col, tech.state(synapse.state), xb.config, xb.spec, tech)


def synapse_latency_totals(xb: CrossbarPlacement, tech: TechnologyParams) -> np.ndarray:
    """Total path latency per placed synapse, vectorized.

    Equivalent to path_latency(...).total per synapse minus the validity
    checks; placements produced by the mapper are sound by construction.
    """
    if not xb.synapses:
        return np.zeros(0)
    rows = np.array([s.row for s in xb.synapses], dtype=float)
    cols = np.array([s.col for s in xb.synapses], dtype=float)
    resistance = {s.label: s.resistance for s in tech.states}
    res = np.array([resistance[s.state] for s in xb.synapses])
    spec, config = xb.spec, xb.config
    wl_len = spec.n if config.cols_expanded else spec.q
    bl_len = spec.n if config.rows_expanded else spec.p
    k_wl = cols + 1
    k_bl = rows + 1
    wl = tech.r_wordline_unit * tech.c_wordline_unit * (k_wl * wl_len - k_wl * (k_wl - 1) / 2)
    bl = tech.r_bitline_unit * tech.c_bitline_unit * (k_bl * bl_len - k_bl * (k_bl - 1) / 2)
    iso = tech.t_iso_on * (
        int(config.rows_expanded) * (rows >= spec.p)
        + int(config.cols_expanded) * (cols >= spec.q)
    )
    return wl + bl + iso + res * tech.c_sense


def propagate(placement: Placement, trains, tech: TechnologyParams) -> list[ArrivalTrain]:
    """Per-synapse arrival trains: spike time plus the cell's path latency."""
    known = set()
    for xb in placement.crossbars:
        known.update(xb.row_of_pre)
    by_neuron = {}
    for t in trains:
        if t.neuron not in known:
            raise UnknownNeuron(f"neuron {t.neuron} spikes but is not placed as a pre-synaptic neuron")
        by_neuron[t.neuron] = t.times

    arrivals = []
    for xb in placement.crossbars:
        for idx, s in enumerate(xb.synapses):
            times = by_neuron.get(s.pre)
            if not times:
                continue
            delay = _synapse_latency(xb, s, tech).total
            arrivals.append(ArrivalTrain(
                crossbar_id=xb.crossbar_id, synapse_index=idx, pre=s.pre, post=s.post,
                state=s.state, times=tuple(t + delay for t in times)))
    return arrivals


def if_neuron_fire(neuron: IFNeuron, arrivals, out_neuron: int = -1) -> SpikeTrain:
    """Event-driven integrate-and-fire over (time, state_label) arrivals.

    Potential leaks linearly toward zero between events, jumps by the
    state-keyed increment per arrival (coincident arrivals accumulate before
    the threshold test), and resets to zero on firing. Arrivals inside the
    refractory window are dropped.
    """
    events = sorted(arrivals, key=lambda e: e[0])
    v = 0.0
    t_prev = 0.0
    last_spike = None
    out = []
    i = 0
    while i < len(events):
        t = events[i][0]
        group = []
        while i < len(events) and events[i][0] == t:
            group.append(events[i][1])
            i += 1
        if last_spike is not None and t < last_spike + neuron.refractory:
            continue
        v = max(0.0, v - neuron.leak_per_second * (t - t_prev))
        t_prev = t
        for state in group:
            v += neuron.v_increment_per_state[state]
        if v >= neuron.v_threshold:
            out.append(t)
            v = 0.0
            last_spike = t
    return SpikeTrain(neuron=out_neuron, times=tuple(out))


# ---------------------------------------------------------------------------
# latency statistics


def corner_extremes(spec: CrossbarSpec, tech: TechnologyParams,
                    config: Configuration = CONFIG_11) -> LatencyStats:
    """Latency extremes over every active cell and permitted state.

    This is the geometry-only notion of latency variation: the fastest and
    slowest current path the crossbar could ever exercise given its region
    rules, independent of any particular workload.
    """
    rows, cols = config_dimensions(config, spec)
    wl_len = spec.n if config.cols_expanded else spec.q
    bl_len = spec.n if config.rows_expanded else spec.p
    wl_tap = np.array([line_tap_delay(c + 1, wl_len, tech.r_wordline_unit, tech.c_wordline_unit)
                       for c in range(cols)])
    bl_tap = np.array([line_tap_delay(r + 1, bl_len, tech.r_bitline_unit, tech.c_bitline_unit)
                       for r in range(rows)])
    r_idx = np.arange(rows)[:, None]
    c_idx = np.arange(cols)[None, :]
    base = bl_tap[:, None] + wl_tap[None, :]
    if config.rows_expanded:
        base = base + tech.t_iso_on * (r_idx >= spec.p)
    if config.cols_expanded:
        base = base + tech.t_iso_on * (c_idx >= spec.q)

    in_a = (r_idx < spec.n_h) & (c_idx < spec.n_h)
    in_b = (r_idx >= spec.n - spec.n_l) & (c_idx >= spec.n - spec.n_l)
    best = np.inf
    worst = -np.inf
    total = 0.0
    count = 0
    for state in tech.states:
        if state.label == HRS:
            mask = ~in_b
        elif state.label == LRS1:
            mask = ~in_a
        else:
            mask = ~in_a & ~in_b
        if not mask.any():
            continue
        totals = base[mask] + sense_latency(state, tech)
        best = min(best, float(totals.min()))
        worst = max(worst, float(totals.max()))
        total += float(totals.sum())
        count += totals.size
    return LatencyStats(best=best, worst=worst, diff=worst - best,
                        ratio=best / worst, mean=total / count)


@dataclass(frozen=True)
class CrossbarLatencyReport:
    crossbar_id: int
    cluster_id: int
    placed: LatencyStats     # over the synapses actually mapped
    extremes: LatencyStats   # geometric extremes of this crossbar as configured


@dataclass(frozen=True)
class LatencyReport:
    per_crossbar: tuple[CrossbarLatencyReport, ...]
    aggregate: LatencyStats
    extremes: LatencyStats


def latency_stats(placement: Placement, tech: TechnologyParams) -> LatencyReport:
    if not placement.crossbars:
        raise EmptyPlacement("placement maps no crossbars")
    per = []
    all_totals = []
    ext_best, ext_worst, ext_means = [], [], []
    for xb in placement.crossbars:
        totals = synapse_latency_totals(xb, tech)
        all_totals.extend(totals.tolist())
        ext = corner_extremes(xb.spec, tech, xb.config)
        ext_best.append(ext.best)
        ext_worst.append(ext.worst)
        ext_means.append(ext.mean)
        per.append(CrossbarLatencyReport(crossbar_id=xb.crossbar_id, cluster_id=xb.cluster_id,
                                         placed=LatencyStats.from_values(totals), extremes=ext))
    best, worst = min(ext_best), max(ext_worst)
    extremes = LatencyStats(best=best, worst=worst, diff=worst - best, ratio=best / worst,
                            mean=float(np.mean(ext_means)))
    return LatencyReport(per_crossbar=tuple(per),
                         aggregate=LatencyStats.from_values(all_totals),
                         extremes=extremes)


def average_latency_delta(m: int, n: int, delta: float) -> float:
    """Mean-latency reduction from swapping HRS onto the short path.

    With m LRS synapses and n HRS synapses split over a short and a long path
    whose parasitic delays differ by `delta`, the balanced arrangement changes
    the mean latency by ((n - m) / (n + m)) * delta (positive = faster).
    """
    if m < 0 or n < 0:
        raise EmptyCounts(f"synapse counts must be >= 0, got m={m} n={n}")
    if m + n == 0:
        raise EmptyCounts("m + n must be positive")
    return ((n - m) / (n + m)) * delta


# ---------------------------------------------------------------------------
# ISI distortion at neuron granularity


def neuron_isi_distortion(placement: Placement, trains, tech: TechnologyParams) -> dict:
    """Per post-neuron |ISI(out) - ISI(in)| of the merged trains at its column.

    Post-neurons whose merged input or arrival train has fewer than two
    spikes are omitted.
    """
    arrivals = propagate(placement, trains, tech)
    by_neuron = {t.neuron: t.times for t in trains}
    merged_in: dict[int, list] = {}
    merged_out: dict[int, list] = {}
    for a in arrivals:
        merged_in.setdefault(a.post, []).extend(by_neuron[a.pre])
        merged_out.setdefault(a.post, []).extend(a.times)
    result = {}
    for post in sorted(merged_out):
        t_in = sorted(merged_in[post])
        t_out = sorted(merged_out[post])
        if len(t_in) < 2 or len(t_out) < 2:
            continue
        isi_in = (t_in[-1] - t_in[0]) / (len(t_in) - 1)
        isi_out = (t_out[-1] - t_out[0]) / (len(t_out) - 1)
        result[post] = abs(isi_out - isi_in)
    return result


# ---------------------------------------------------------------------------
# energy


def _access_multiplier(synapse, config: Configuration, spec: CrossbarSpec) -> int:
    # Far-region access drives two isolation transistors plus the access
    # transistor (3x a plain wordline raise); a single-side expansion drives
    # one isolation transistor (2x); collapsed-region accesses stay at 1x.
    far = synapse.row >= spec.p or synapse.col >= spec.q
    if not far:
        return 1
    return 3 if config == CONFIG_11 else 2


def energy_report(placement: Placement, activity: Activity, tech: TechnologyParams) -> EnergyReport:
    """Energy ledger over the activity window.

    Idle crossbars (beyond the mapped ones) are fully power-gated and
    contribute nothing to the static term.
    """
    static = sum(static_energy_weight(xb.config, xb.spec) for xb in placement.crossbars)
    static_j = static * tech.leakage_per_cell * activity.duration
    spike_j = activity.total_spikes * tech.e_spike
    routing_j = activity.routed_spike_hops * tech.e_route_hop
    access_j = 0.0
    for xb in placement.crossbars:
        totals = synapse_latency_totals(xb, tech)
        for s, t_access in zip(xb.synapses, totals):
            count = activity.spike_counts.get(s.pre, 0)
            if not count:
                continue
            k = _access_multiplier(s, xb.config, xb.spec)
            access_j += count * tech.p_wordline_raise * float(t_access) * k
    return EnergyReport(static_j=static_j, spike_j=spike_j, routing_j=routing_j,
                        access_overhead_j=access_j)
