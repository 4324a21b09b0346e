import pytest
import torch

from codes.library import BUILTIN, builtin_codes
from codes.spec import KINDS
from compiler.build import compile_code

PAIRS = [(name, kind) for name in BUILTIN for kind in KINDS]


@pytest.fixture(scope='session')
def codes():
    return {code.name: code for code in builtin_codes()}


@pytest.fixture(scope='session')
def sequences(codes):
    return {(name, kind): compile_code(codes[name], kind,
                                       tolerate_mismatch=True)
            for name, kind in PAIRS}


@pytest.fixture
def gen():
    return torch.Generator().manual_seed(1234)
