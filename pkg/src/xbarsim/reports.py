"""CSV and JSON report emitters (and their loaders).

CSV is the plotting contract: flat tables, one observation per row. The JSON
report bundles everything a downstream tool needs in one document.
"""

from __future__ import annotations

import csv
import json
import math

from .dse import SweepPoint
from .errors import ParseError
from .simulate import EnergyReport, LatencyReport


def _r(x) -> str:
    # repr of the plain float: shortest round-trippable text, numpy-free
    return repr(float(x))


def write_latency_csv(report: LatencyReport, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["crossbar", "cluster", "best", "worst", "diff", "ratio", "mean",
                         "extreme_best", "extreme_worst", "extreme_diff", "extreme_ratio"])
        for xb in report.per_crossbar:
            p, e = xb.placed, xb.extremes
            writer.writerow([xb.crossbar_id, xb.cluster_id,
                             _r(p.best), _r(p.worst), _r(p.diff), _r(p.ratio), _r(p.mean),
                             _r(e.best), _r(e.worst), _r(e.diff), _r(e.ratio)])


def read_latency_csv(path) -> list[dict]:
    """Per-crossbar latency rows as dicts keyed by the column names."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or reader.fieldnames[0] != "crossbar":
            raise ParseError(f"{path}: not a latency table")
        rows = []
        for row in reader:
            rows.append({k: (int(v) if k in ("crossbar", "cluster") else float(v))
                         for k, v in row.items()})
        return rows


def write_energy_csv(report: EnergyReport, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["static_j", "spike_j", "routing_j", "access_overhead_j", "total_j"])
        writer.writerow([_r(report.static_j), _r(report.spike_j), _r(report.routing_j),
                         _r(report.access_overhead_j), _r(report.total_j)])


def read_energy_csv(path) -> EnergyReport:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        row = next(iter(reader), None)
        if row is None or "static_j" not in row:
            raise ParseError(f"{path}: not an energy table")
        return EnergyReport(static_j=float(row["static_j"]), spike_j=float(row["spike_j"]),
                            routing_j=float(row["routing_j"]),
                            access_overhead_j=float(row["access_overhead_j"]))


def write_isi_csv(distortions: dict, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["neuron", "isi_distortion"])
        for neuron in sorted(distortions):
            writer.writerow([neuron, _r(distortions[neuron])])


def read_isi_csv(path) -> dict:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["neuron", "isi_distortion"]:
            raise ParseError(f"{path}: not an ISI table")
        return {int(row[0]): float(row[1]) for row in reader if row}


def _stats_json(stats) -> dict:
    return {"best": stats.best, "worst": stats.worst, "diff": stats.diff,
            "ratio": stats.ratio, "mean": stats.mean}


def write_simulation_json(latency: LatencyReport, energy: EnergyReport,
                          distortions: dict, path) -> None:
    doc = {
        "latency": {
            "aggregate": _stats_json(latency.aggregate),
            "extremes": _stats_json(latency.extremes),
            "per_crossbar": [
                {"crossbar": xb.crossbar_id, "cluster": xb.cluster_id,
                 "placed": _stats_json(xb.placed), "extremes": _stats_json(xb.extremes)}
                for xb in latency.per_crossbar
            ],
        },
        "energy": {"static_j": energy.static_j, "spike_j": energy.spike_j,
                   "routing_j": energy.routing_j, "access_overhead_j": energy.access_overhead_j,
                   "total_j": energy.total_j},
        "isi_distortion": {str(k): v for k, v in sorted(distortions.items())},
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_sweep_csv(sweeps, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["network", "P", "Q", "norm_energy", "norm_latency",
                         "norm_variation", "expanded_fraction"])
        for points in sweeps:
            for pt in points:
                writer.writerow([pt.network, pt.p, pt.q, _r(pt.norm_energy),
                                 _r(pt.norm_latency), _r(pt.norm_variation),
                                 _r(pt.expanded_fraction)])


def read_sweep_csv(path) -> list[list[SweepPoint]]:
    per_network: dict[str, list[SweepPoint]] = {}
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or header[:3] != ["network", "P", "Q"]:
            raise ParseError(f"{path}: not a sweep table")
        for row in reader:
            if not row:
                continue
            name = row[0]
            values = [float(x) for x in row[3:7]]
            pt = SweepPoint(network=name, p=int(row[1]), q=int(row[2]),
                            norm_energy=values[0], norm_latency=values[1],
                            norm_variation=values[2], expanded_fraction=values[3],
                            feasible=not math.isnan(values[0]))
            per_network.setdefault(name, []).append(pt)
    return list(per_network.values())


def write_analysis_csv(rows, path=None):
    """Analysis table; rows are dicts with the fixed column set."""
    columns = ["n", "F", "cost_per_bit", "total_bits", "height_pct", "width_pct",
               "iso_count_fine", "iso_count_coarse"]
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(
            _r(row[c]) if isinstance(row[c], float) else str(row[c]) for c in columns
        ))
    text = "\n".join(lines) + "\n"
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text
