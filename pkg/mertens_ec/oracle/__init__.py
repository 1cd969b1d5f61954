from .curves import TraceCensus, WeierstrassCurve, count_points, trace_census
from .product import product_oracle

__all__ = ["TraceCensus", "WeierstrassCurve", "count_points", "product_oracle", "trace_census"]
