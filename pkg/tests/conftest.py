import numpy as np
import pytest

from memfuse.model import (
    Dataset,
    MemoryRecord,
    PadTriple,
    ViewerContext,
    ViewerResponse,
)


def make_context(age=30, gender="female", nationality="US", hexaco=None, mood=None):
    return ViewerContext(
        age=age,
        gender=gender,
        nationality=nationality,
        hexaco=tuple(hexaco) if hexaco is not None else (0.1, 0.2, 0.3, 0.4, 0.5, 0.6),
        mood=mood if mood is not None else PadTriple(0.0, 0.0, 0.0),
    )


def make_response(pid, vid, induced=(0.0, 0.0, 0.0), memories=(), context=None):
    return ViewerResponse(
        participant_id=pid,
        video_id=vid,
        induced=PadTriple(*induced),
        memories=tuple(memories),
        context=context if context is not None else make_context(),
    )


def memory(text="a nice day out", affect=(0.0, 0.0, 0.0)):
    return MemoryRecord(text=text, affect=PadTriple(*affect))


@pytest.fixture
def toy_dataset():
    rows = [
        make_response("p1", "v1", induced=(0.2, 0.1, 0.0), memories=[memory(affect=(0.3, 0.0, 0.4))]),
        make_response("p1", "v2", induced=(-0.1, 0.0, 0.2)),
        make_response(
            "p2",
            "v1",
            induced=(0.5, -0.2, 0.1),
            memories=[
                memory("the small one", affect=(0.3, 0.0, 0.4)),
                memory("the big one", affect=(0.6, 0.0, 0.8)),
            ],
        ),
        make_response("p3", "v2", induced=(0.0, 0.4, -0.3)),
    ]
    return Dataset(responses=tuple(rows))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
