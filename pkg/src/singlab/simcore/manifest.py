"""Run provenance records."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

ENGINES = (
    "surface_diffusion",
    "viscous_thread",
    "stokes_pinch",
    "mcf_centre",
    "bubble_pinch",
    "wave_chaos",
)


@dataclass
class RunManifest:
    """What produced a set of output files, serialized next to them.

    ``engine`` identifies the solver family, ``config`` is the fully
    resolved parameter tree actually used (defaults filled in), ``seed``
    the RNG seed if any randomness was involved, ``outputs`` the relative
    paths written.  Timestamps are UTC ISO-8601.
    """

    engine: str
    config: dict
    seed: int | None = None
    outputs: list[str] = field(default_factory=list)
    started: str = ""
    finished: str = ""

    def __post_init__(self):
        if self.engine not in ENGINES:
            raise ValueError(f"unknown engine {self.engine!r}; expected one of {ENGINES}")

    @staticmethod
    def now() -> str:
        return datetime.now(timezone.utc).isoformat(timespec="seconds")

    def mark_started(self) -> None:
        self.started = self.now()

    def mark_finished(self) -> None:
        self.finished = self.now()

    def to_dict(self) -> dict:
        return {
            "engine": self.engine,
            "config": self.config,
            "seed": self.seed,
            "outputs": list(self.outputs),
            "started": self.started,
            "finished": self.finished,
        }

    def write(self, path: str | Path) -> Path:
        path = Path(path)
        path.write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n")
        return path

    @classmethod
    def read(cls, path: str | Path) -> "RunManifest":
        data = json.loads(Path(path).read_text())
        return cls(
            engine=data["engine"],
            config=data["config"],
            seed=data.get("seed"),
            outputs=list(data.get("outputs", [])),
            started=data.get("started", ""),
            finished=data.get("finished", ""),
        )

    def check_outputs(self, root: str | Path) -> list[str]:
        """Relative output paths that do not exist under ``root``."""
        root = Path(root)
        return [p for p in self.outputs if not (root / p).exists()]
