from frontseek.core.data import Bounds, Dataset, Feasibility, Sample
from frontseek.core.dominance import dominates, pareto_mask, pareto_subset
from frontseek.core.hypervolume import (
    grid_axes,
    hypervolume,
    hypervolume_improvement,
    hypervolume_improvement_batch,
)
