"""Модуль с таблицами зарядов абелевых GLSM и производными данными."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from core.constants import GlsmCfg
from exact.laurent import LaurentPolynomial

Fan = tuple[tuple[int, ...], ...]


class PoincarePolynomial(LaurentPolynomial):
    """Многочлен Пуанкаре Σ dim H^k·t^k."""

    variable = GlsmCfg.POINCARE_VARIABLE


@dataclass(frozen=True)
class Coordinate:
    """
    Координата пространства V.

    Поля:
    - name: Имя координаты (x1, p, u, ...).
    - weight: Вес D_i относительно тора C^*.
    - finite_weight: Вес относительно μ_2 (0 или 1).
    - r_charge: R-заряд q_i.
    """

    name: str
    weight: int
    finite_weight: int = 0
    r_charge: Fraction = Fraction(0)


@dataclass(frozen=True)
class GlsmCharges:
    """
    Таблица зарядов GLSM с тором ранга 1 и конечным множителем.

    Поля:
    - name: Название модели.
    - coords: Координаты в порядке столбцов веера.
    - finite_order: Порядок конечного множителя (1 или 2).
    - fan_columns: Столбцы v_1..v_N веера, если веер задан.
    """

    name: str
    coords: tuple[Coordinate, ...]
    finite_order: int = 1
    fan_columns: Fan | None = None

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(coord.weight for coord in self.coords)

    @property
    def r_charges(self) -> tuple[Fraction, ...]:
        return tuple(coord.r_charge for coord in self.coords)

    def coordinate(self, index: int) -> Coordinate:
        """Координата по номеру, считая с единицы."""
        return self.coords[index - 1]

    def index_of(self, name: str) -> int:
        for index, coord in enumerate(self.coords, start=1):
            if coord.name == name:
                return index
        raise KeyError(name)

    def is_calabi_yau(self) -> bool:
        return sum(self.weights) == 0


@dataclass(frozen=True)
class BoxElement:
    """
    Элемент Box: групповой элемент с непустым неподвижным полустабильным
    множеством.

    Поля:
    - group_element: Пара (a, s): тор действует как e^{2πi·a}, a ∈ [0,1),
    конечная часть равна s = ±1.
    - age: Сумма дробных весов действия на координатах.
    - fixed_coords: Номера координат (с единицы) с нулевым весом.
    - component_label: Метка компоненты инерционного стека.
    """

    group_element: tuple[Fraction, int]
    age: Fraction
    fixed_coords: frozenset[int] = field(default_factory=frozenset)
    component_label: str = ""

    @property
    def is_identity(self) -> bool:
        return self.group_element == (Fraction(0), 1)


@dataclass(frozen=True)
class LoopSpaceData:
    """
    Размерности пространства LG-петель степени d.

    Поля:
    - degree: Степень d.
    - dim_V: dim V_d (сумма h^0).
    - dim_W: dim W_d (сумма h^1).
    - dim_L: dim L_d = dim V_d - 1.
    - rank_E: Ранг препятствующего расслоения, равен dim W_d.
    - virtual_dim: dim L_d - rank E_d.
    """

    degree: Fraction
    dim_V: int
    dim_W: int
    dim_L: int
    rank_E: int
    virtual_dim: int


def _columns(rows: Fan) -> Fan:
    """Транспонирует строки матрицы веера в столбцы v_i."""
    return tuple(zip(*rows))


def quintic_model() -> GlsmCharges:
    """GLSM квинтики: x1..x5 веса 1, p веса -5 с R-зарядом 2."""
    coords = tuple(
        Coordinate("x{i}".format(i=i), 1) for i in range(1, 6)
    ) + (Coordinate("p", -5, 0, Fraction(2)),)
    return GlsmCharges(
        GlsmCfg.QUINTIC_MODEL,
        coords,
        fan_columns=_columns(GlsmCfg.QUINTIC_FAN),
    )


def extended_model() -> GlsmCharges:
    """
    Расширенная GLSM вещественной квинтики.

    К квинтике добавлены u и v весов 1 и -1; обе координаты нечётны
    относительно μ_2 и имеют R-заряд 1.
    """
    base = quintic_model().coords
    coords = base + (
        Coordinate("u", 1, 1, Fraction(1)),
        Coordinate("v", -1, 1, Fraction(1)),
    )
    return GlsmCharges(
        GlsmCfg.EXTENDED_MODEL,
        coords,
        finite_order=2,
        fan_columns=_columns(GlsmCfg.EXTENDED_FAN),
    )


MODELS = {
    GlsmCfg.QUINTIC_MODEL: quintic_model,
    GlsmCfg.EXTENDED_MODEL: extended_model,
}
