"""集合モデルとコーデックのスイート"""

from ...core.codecs import (
    emit_family,
    emit_fnfamily,
    emit_fnset,
    parse_family,
    parse_fnfamily,
    parse_fnset,
)
from ...core.report import Report
from ...core.setcore import full_mask, restrict
from ..generators import (
    case_rng,
    random_family,
    random_fnfamily,
    random_fnset,
    random_universe,
)
from ..registry import suite


def _random_setting(params, seed, index):
    rng = case_rng(seed, index)
    N = random_universe(rng, 1, int(params["max_N"]))
    A = random_family(rng, range(1 << N), N)
    return rng, N, A


@suite(
    "setcore.restrict_laws",
    module="setcore",
    invariant="restrict(A, N) = A and restrict(restrict(A,z),z') = restrict(A, z & z')",
    defaults={"max_N": 6},
)
def restrict_laws(case, params, seed):
    _, index = case
    rng, N, A = _random_setting(params, seed, index)
    z, z2 = int(rng.integers(1 << N)), int(rng.integers(1 << N))
    report = Report(name="setcore.restrict_laws")
    if restrict(A, full_mask(N)) != A:
        report.add_violation("restrict to the universe is the identity", family=A.as_lists())
    if restrict(restrict(A, z), z2) != restrict(A, z & z2):
        report.add_violation("restrict composes by intersection", family=A.as_lists(), z=z, z2=z2)
    return report


@suite(
    "setcore.vertex_deletion_restrict",
    module="setcore",
    invariant="restrict(A, N minus {v}) = members of A avoiding v",
    defaults={"max_N": 6},
)
def vertex_deletion_restrict(case, params, seed):
    _, index = case
    rng, N, A = _random_setting(params, seed, index)
    v = int(rng.integers(N))
    report = Report(name="setcore.vertex_deletion_restrict")
    expected = tuple(a for a in A.members if not a >> v & 1)
    if restrict(A, full_mask(N) & ~(1 << v)).members != expected:
        report.add_violation("vertex deletion", family=A.as_lists(), v=v)
    return report


@suite(
    "setcore.codec_roundtrip",
    module="setcore",
    invariant="parse(emit(x)) = x on canonical values for all three codecs",
    defaults={"max_N": 6},
)
def codec_roundtrip(case, params, seed):
    _, index = case
    rng, N, A = _random_setting(params, seed, index)
    report = Report(name="setcore.codec_roundtrip")
    text = emit_family(A)
    if parse_family(text) != A or emit_family(parse_family(text)) != text:
        report.add_violation("family codec round trip", family=A.as_lists())
    functions = random_fnset(rng, N)
    if parse_fnset(emit_fnset(functions)) != functions:
        report.add_violation("function set codec round trip", functions=functions.as_strings())
    pfns = random_fnfamily(rng, N, 4)
    if parse_fnfamily(emit_fnfamily(pfns)) != pfns:
        report.add_violation("partial function codec round trip", pfns=pfns.as_mappings())
    return report
