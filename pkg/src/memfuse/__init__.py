"""memfuse: predicting video-induced emotions from audiovisual content and
affect features extracted from viewers' memory descriptions."""

__version__ = "0.1.0"

from .model import (
    Dataset,
    MemoryRecord,
    PadTriple,
    ViewerContext,
    ViewerResponse,
    load_dataset,
    memory_subset,
    save_dataset,
    select_memory,
)

__all__ = [
    "Dataset",
    "MemoryRecord",
    "PadTriple",
    "ViewerContext",
    "ViewerResponse",
    "load_dataset",
    "memory_subset",
    "save_dataset",
    "select_memory",
    "__version__",
]
