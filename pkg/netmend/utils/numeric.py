from decimal import ROUND_HALF_UP, Decimal

from netmend.core.config import settings


def to_cents(value: float, scale: int | None = None) -> int:
    """Discretize a real cost to integer units of 1/scale, rounding half up."""
    scale = scale or settings.COST_SCALE
    return int((Decimal(repr(float(value))) * scale).quantize(Decimal(1), rounding=ROUND_HALF_UP))


def from_cents(value: int, scale: int | None = None) -> float:
    scale = scale or settings.COST_SCALE
    return value / scale


def format_real(value: float) -> str:
    """Six significant digits, the fixed precision of every report."""
    return f"{value:.6g}"


def round_real(value: float) -> float:
    return float(format_real(value))
