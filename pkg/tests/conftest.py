# -*- coding: utf-8 -*-
import pytest

from hebtok import synth
from hebtok._kernel import load_compiled, load_pure


def available_kernels():
    kernels = [load_pure()]
    compiled = load_compiled()
    if compiled is not None:
        kernels.append(compiled)
    return kernels


@pytest.fixture(params=available_kernels(), ids=lambda m: m.KERNEL_NAME)
def kernel(request):
    return request.param


@pytest.fixture(scope="session")
def small_corpus():
    """2K synthetic sentences shared across unit tests."""
    return list(synth.sample_corpus(2000, seed=101))
