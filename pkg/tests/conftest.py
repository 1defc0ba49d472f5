import functools

import pytest
from hypothesis import HealthCheck, settings

from mulhopf.exactlin import GF, QQ
from mulhopf.instances import (
    cyclic_table, function_algebra, group_algebra, idempotent_table, symmetric_table,
)

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

F7 = GF(7)
FIELDS = {"QQ": QQ, "GF7": F7}
GROUPS = ("Z2", "Z3", "S3")
KINDS = ("function", "group")
ALL_INSTANCES = [(g, k, f) for g in GROUPS for k in KINDS for f in FIELDS]
SMALL_INSTANCES = [(g, k, f) for g in ("Z2", "Z3") for k in KINDS for f in FIELDS]


def table(group):
    if group == "S3":
        return symmetric_table(3)
    return cyclic_table(int(group[1:]))


@functools.lru_cache(maxsize=None)
def build(group, kind, field):
    """(table, bimonoid, regular structure), cached across the whole session."""
    T = table(group)
    make = function_algebra if kind == "function" else group_algebra
    B, R = make(T, FIELDS[field])
    return T, B, R


@functools.lru_cache(maxsize=None)
def idempotent(field="QQ"):
    return function_algebra(idempotent_table(), FIELDS[field])


def inst_id(t):
    return "-".join(t)


@pytest.fixture(params=ALL_INSTANCES, ids=inst_id)
def instance(request):
    return request.param, build(*request.param)


@pytest.fixture(params=SMALL_INSTANCES, ids=inst_id)
def small_instance(request):
    return request.param, build(*request.param)
