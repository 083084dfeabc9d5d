from frontseek.optimizer.loop import (
    Fantasy,
    Models,
    RunState,
    SuggestionBatch,
    WorkingSet,
    evaluate_batch,
    initial_calculation,
    optimize,
    suggestion_sequence,
    update_models,
)
from frontseek.optimizer.maximizer import maximize_acquisition
