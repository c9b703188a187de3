from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Outcome of a certification step.

    ``witness`` holds the first offending indices when ``passed`` is false.
    """

    name: str
    passed: bool
    detail: str = ""
    witness: tuple = ()
    stats: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def lines(self) -> list[str]:
        out = [f"{self.name}={'pass' if self.passed else 'fail'}"]
        for key, value in self.stats.items():
            out.append(f"{self.name}.{key}={value}")
        if not self.passed:
            if self.detail:
                out.append(f"{self.name}.detail={self.detail}")
            if self.witness:
                out.append(f"{self.name}.witness={','.join(map(str, _flatten(self.witness)))}")
        return out


def _flatten(items):
    for it in items:
        if isinstance(it, (tuple, list)):
            yield from _flatten(it)
        else:
            yield it
