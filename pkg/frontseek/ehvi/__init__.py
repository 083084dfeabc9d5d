from frontseek.ehvi.expected import SectorDecomposition, evi_exact
from frontseek.ehvi.grid import (
    NEG_INF,
    GridCoordinates,
    Sector,
    build_sector_grid,
    nondominated_sectors,
)
from frontseek.ehvi.integrals import (
    gaussian_integral_I1,
    gaussian_integral_I2,
    gaussian_integral_I3,
)
from frontseek.ehvi.truncation import (
    TruncationEllipsoid,
    evi_truncated,
    intersection_mask,
    sector_intersects_ellipsoid,
)
