from __future__ import annotations

import functools

import pytest

from arrgroups.arrangement import builtin
from arrgroups.nilq.nq import nilpotent_quotient
from arrgroups.presentations import randell_presentation
from arrgroups.wiring import wiring_diagram


@functools.lru_cache(maxsize=None)
def randell(name: str):
    return randell_presentation(wiring_diagram(builtin(name)))


@functools.lru_cache(maxsize=None)
def nq(name: str, c: int):
    return nilpotent_quotient(randell(name), c)


@pytest.fixture
def cached_nq():
    return nq
