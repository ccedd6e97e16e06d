from fractions import Fraction

import pytest

from core.exceptions import DomainError
from core.serializers import deserialize
from enumerative.mirror import (
    cy_components,
    disk_invariants_cy,
    disk_multiple_cover_reduce,
    disk_potential_series,
    extended_potentials,
    gw_invariants,
    h3_consistency,
    lg_components,
    lg_disk_table,
    lg_mirror_series,
    mirror_map_cy,
    multiple_cover_reduce,
)
from enumerative.models import InvariantTable
from enumerative.serializers import InvariantTableSerializer
from series.models import PuiseuxSeries


def test_mirror_map_leading_terms() -> None:
    log_q, inverse = mirror_map_cy(3)
    assert log_q.part(1)[0] == 1
    assert log_q.part(0)[1] == 770
    assert inverse[1] == 1
    assert inverse[2] == -770
    with pytest.raises(DomainError):
        mirror_map_cy(1)


def test_closed_genus_zero_invariants() -> None:
    table = gw_invariants(4)
    assert table.kind == "gw_closed"
    assert table[1] == 2875
    assert table[2] == Fraction(4876875, 8)
    assert table[3] == 317206375 + Fraction(2875, 27)


def test_closed_invariants_reduce_to_integers() -> None:
    reduced = multiple_cover_reduce(gw_invariants(4))
    assert [reduced[d] for d in range(1, 5)] == [
        2875,
        609250,
        317206375,
        242467530000,
    ]


def test_frobenius_source_gives_same_invariants() -> None:
    assert gw_invariants(3, "frobenius") == gw_invariants(3)
    assert disk_invariants_cy(3, "frobenius") == disk_invariants_cy(3)


def test_h3_component_is_consistent() -> None:
    assert h3_consistency(3).is_zero()


def test_disk_invariants() -> None:
    table = disk_invariants_cy(5)
    assert table.degrees() == [1, 3, 5]
    assert table[1] == 30
    reduced = disk_multiple_cover_reduce(table)
    assert reduced.kind == "disk_cy_reduced"
    assert [reduced[d] for d in (1, 3, 5)] == [30, 1530, 1088250]


@pytest.mark.parametrize("max_degree", [0, -2])
def test_invalid_max_degree(max_degree: int) -> None:
    with pytest.raises(DomainError):
        gw_invariants(max_degree)
    with pytest.raises(DomainError):
        disk_invariants_cy(max_degree)


def test_unknown_source() -> None:
    with pytest.raises(DomainError):
        cy_components(3, "oracle")
    with pytest.raises(DomainError):
        lg_components(3, "oracle")


@pytest.mark.parametrize("k", range(4))
def test_lg_components_from_frobenius(k: int) -> None:
    closed = lg_components(12)[k]
    assert lg_components(12, "frobenius")[k].agrees_with(closed)


def test_lg_mirror_series() -> None:
    tau, potential = lg_mirror_series(8)
    assert tau.valuation() == 1
    assert tau[1] == 1
    assert potential.valuation() == Fraction(3, 2)
    assert potential[Fraction(3, 2)] == Fraction(-2, 3)
    with pytest.raises(DomainError):
        lg_mirror_series(2)


def test_lg_disk_table_is_conjectural() -> None:
    table = lg_disk_table(8)
    assert table.kind == "disk_lg"
    assert table.conjectural
    assert table[Fraction(3, 2)] == Fraction(-2, 3)


def test_extended_potentials_match_disk_potentials() -> None:
    plus, minus = extended_potentials(3)
    assert plus.agrees_with(disk_potential_series(5).scale(-1))
    assert plus[Fraction(1, 2)] == -30
    _, lg_potential = lg_mirror_series(3)
    assert minus.agrees_with(lg_potential.scale(-1))


@pytest.mark.parametrize("build", [gw_invariants, disk_invariants_cy])
def test_tables_are_stable_under_truncation(build) -> None:
    assert build(9).restricted(6) == build(6)


def test_lg_disk_table_is_stable_under_truncation() -> None:
    short = lg_disk_table(6)
    long = lg_disk_table(9).restricted(short.truncation)
    assert long.entries == short.entries
    assert long.truncation == short.truncation


def test_table_restriction_and_series() -> None:
    table = disk_invariants_cy(3)
    assert table.restricted(1).degrees() == [1]
    assert table.restricted(1).truncation == 1
    series = table.as_series()
    assert series.order == 2
    assert series[Fraction(1, 2)] == 30


def test_table_serializer() -> None:
    table = InvariantTable(
        "disk_cy", {Fraction(1): Fraction(30)}, Fraction(1)
    )
    data = InvariantTableSerializer(table).data
    assert data["entries"] == [[1, 1, 30, 1]]
    assert data["truncation"] == [1, 1]
    assert deserialize(InvariantTableSerializer, data) == table


@pytest.mark.parametrize(
    "data",
    [
        {"kind": "gw_closed", "entries": []},
        {"kind": "gw_closed", "entries": [[1, 1, 2]], "truncation": [1, 1]},
        {"kind": "disk_cy", "entries": [[1, 1, 2.5, 1]], "truncation": [1]},
        {
            "kind": "disk_cy",
            "entries": [[1, 0, 2, 1]],
            "truncation": [1, 1],
        },
        None,
    ],
)
def test_table_serializer_format_errors(data: object) -> None:
    with pytest.raises(DomainError):
        deserialize(InvariantTableSerializer, data)


def test_table_as_series_for_closed_invariants() -> None:
    table = InvariantTable(
        "gw_closed", {Fraction(1): Fraction(2875)}, Fraction(1)
    )
    assert table.as_series() == PuiseuxSeries({1: 2875}, 2)
