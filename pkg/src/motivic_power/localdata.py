"""Bundled punctual series data for surfaces.

The shipped JSON file is generated, never hand-typed: running

    python -m motivic_power.localdata

rewrites it from the partition-sum oracle.  A test regenerates the
payload and diffs it against the committed file so drift is caught.
"""

from __future__ import annotations

import functools
import json
from pathlib import Path

from .oracles import punctual_surface_class_oracle
from .rings import Polynomial, RingDescriptor
from .series import Series

SURFACE_ORDER = 32
SURFACE_FILE = Path(__file__).parent / "data" / "surface_local_series.json"

_SOURCE_NOTE = (
    "generated by `python -m motivic_power.localdata`; coefficient n is the "
    "partition sum over partitions of n of L^(n - number of parts), computed "
    "by motivic_power.oracles.punctual_surface_class_oracle"
)

MOTIVIC_RING = RingDescriptor(("L",), laurent=True)


def surface_payload(order: int = SURFACE_ORDER) -> dict:
    """Build the data-file payload from the partition oracle."""
    coeffs = [Polynomial.one(MOTIVIC_RING)]
    for n in range(1, order + 1):
        coeffs.append(punctual_surface_class_oracle(n))
    series = Series(MOTIVIC_RING, order, coeffs)
    return {"dimension": 2, "source": _SOURCE_NOTE, "series": series.to_json()}


def render_payload(payload: dict) -> str:
    return json.dumps(payload, indent=1) + "\n"


@functools.lru_cache(maxsize=None)
def load_surface_series() -> Series:
    """The bundled punctual series for surfaces, as a Series over Z[L^(+-)]."""
    with open(SURFACE_FILE, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    if payload.get("dimension") != 2:
        raise ValueError("bundled surface file has wrong dimension tag")
    series = Series.from_json(payload["series"])
    if series.ring != MOTIVIC_RING:
        raise ValueError("bundled surface file has wrong coefficient ring")
    return series


def write_surface_file(path: Path = SURFACE_FILE, order: int = SURFACE_ORDER):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_payload(surface_payload(order)), encoding="utf-8")
    return path


if __name__ == "__main__":
    target = write_surface_file()
    print("wrote %s" % target)
