"""Integer-valued point labels."""

from collections.abc import Iterable

from plexlayout.core.exceptions import PointRangeError


class Label:
    """Named assignment of one integer value per point.

    Setting a value on a point that already carries one replaces it, so every
    point appears in at most one stratum of the label.
    """

    def __init__(self, name: str, chart_size: int) -> None:
        self.name = name
        self.chart_size = chart_size
        self._value_of: dict[int, int] = {}
        self._strata: dict[int, set[int]] = {}

    def _check_point(self, p: int) -> int:
        p = int(p)
        if not 0 <= p < self.chart_size:
            raise PointRangeError(
                f"Point {p} outside chart [0, {self.chart_size}) of label '{self.name}'",
                details={"point": p, "chart_size": self.chart_size, "label": self.name},
            )
        return p

    def set_value(self, value: int, p: int) -> None:
        """Assign ``value`` to ``p``, dropping any previous value."""
        p = self._check_point(p)
        value = int(value)
        previous = self._value_of.get(p)
        if previous == value:
            return
        if previous is not None:
            self._strata[previous].discard(p)
            if not self._strata[previous]:
                del self._strata[previous]
        self._value_of[p] = value
        self._strata.setdefault(value, set()).add(p)

    def clear_value(self, p: int) -> None:
        """Remove ``p`` from the label."""
        p = self._check_point(p)
        previous = self._value_of.pop(p, None)
        if previous is not None:
            self._strata[previous].discard(p)
            if not self._strata[previous]:
                del self._strata[previous]

    def has(self, value: int, p: int) -> bool:
        """Whether ``p`` currently holds ``value``."""
        p = self._check_point(p)
        return self._value_of.get(p) == int(value)

    def value(self, p: int) -> int | None:
        """Value held by ``p``, or None."""
        return self._value_of.get(self._check_point(p))

    def stratum(self, value: int) -> list[int]:
        """All points holding ``value``, ascending."""
        return sorted(self._strata.get(int(value), ()))

    def stratum_size(self, value: int) -> int:
        return len(self._strata.get(int(value), ()))

    def values(self) -> list[int]:
        """Values currently in use, ascending."""
        return sorted(self._strata)

    def points(self) -> list[int]:
        """All labelled points, ascending."""
        return sorted(self._value_of)

    def renamed(self, new_of_old: Iterable[int], name: str | None = None) -> "Label":
        """Copy of the label with every point ``p`` renamed to ``new_of_old[p]``."""
        mapping = list(new_of_old)
        copy = Label(name or self.name, len(mapping))
        for p, value in self._value_of.items():
            copy.set_value(value, mapping[p])
        return copy

    def __len__(self) -> int:
        return len(self._value_of)

    def __repr__(self) -> str:
        return f"Label(name={self.name!r}, points={len(self)}, values={self.values()})"
