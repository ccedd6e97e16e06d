"""Константы и настройки для модулей проекта."""

from fractions import Fraction
from math import pi


class LoggingCfg:
    """Настройки для журналирования."""

    FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class ExactCfg:
    """Настройки для точной арифметики."""

    DEFAULT_VARIABLE = "x"
    FACTORIAL_DOMAIN_ERROR = "Факториал определён для n >= 0, получено {n}"
    DOUBLE_FACTORIAL_DOMAIN_ERROR = (
        "Двойной факториал определён для n >= -1, получено {n}"
    )
    POCHHAMMER_DOMAIN_ERROR = (
        "Символ Похгаммера определён для m >= 0, получено {m}"
    )
    GAMMA_HALF_INTEGER_ERROR = (
        "Аргумент {k} не является полуцелым или Γ имеет в нём полюс"
    )
    PI_POWER_DOMAIN_ERROR = (
        "Показатель степени должен быть целым, получено {power}"
    )
    PI_GRADING_ERROR = (
        "Нельзя сложить c·π^(k/2) с разными k: {left} и {right}"
    )
    PI_DIVISION_ERROR = "Деление {left} на {right} не определено"
    CYCLOTOMIC_ORDER_ERROR = (
        "Порядок кругового многочлена должен быть >= 1, получено {order}"
    )
    LAURENT_INTEGRALITY_ERROR = (
        "Показатель {exponent} с коэффициентом {coeff} не целый"
    )
    LAURENT_NEGATIVE_POWER_ERROR = (
        "Степень многочлена Лорана должна быть >= 0, получено {value}"
    )
    LAURENT_ZERO_DEGREE_ERROR = "Степень нулевого многочлена не определена"
    LAURENT_ZERO_DIVISION_ERROR = "Деление на нулевой многочлен"


class SeriesCfg:
    """Настройки для рядов Пюизё."""

    VARIABLE = "q"
    MAX_LOG_PARTS = 4
    LATTICE_ERROR = (
        "Показатель {exponent} не лежит в решётке (1/{ramification})Z"
    )
    LOG_RANK_ERROR = (
        "Логарифмический ранг {rank} больше допустимого (не более 3)"
    )
    ORDER_REQUIRED_ERROR = (
        "Для бесконечного результата нужен порядок усечения"
    )
    NEGATIVE_POWER_ERROR = "Степень должна быть >= 0, получено {power}"
    ZERO_LEADING_TERM_ERROR = "У нулевого ряда нет старшего члена"
    INVERT_ZERO_ERROR = "Нулевой ряд необратим"
    INVERT_LOG_LEADING_ERROR = (
        "Старший член ряда с логарифмами должен быть свободен от log"
    )
    EXP_DOMAIN_ERROR = (
        "Экспонента определена для рядов с положительными показателями"
    )
    LOG_DOMAIN_ERROR = (
        "log(1 + a) определён для рядов a с положительными показателями"
    )
    COMPOSE_DOMAIN_ERROR = (
        "Подставляемый ряд должен быть ненулевым с положительным "
        "старшим показателем"
    )
    FRACTIONAL_LEADING_ERROR = (
        "Коэффициент {coeff} нельзя возвести в дробную степень {exponent}"
    )
    FRACTIONAL_RESCALE_ERROR = (
        "Растяжение переменной допустимо только для целых показателей, "
        "получено {exponent}"
    )
    SUBSTITUTE_POWER_ERROR = (
        "Замена x = y^k требует целого k >= 1, получено {k}"
    )
    REVERSION_DOMAIN_ERROR = (
        "Обращение композиции требует ряда вида x·(1 + O(x)), "
        "получено {v}"
    )
    REVERSION_CONVERGED_LOG = (
        "Обращение композиции сошлось за {iterations} итераций "
        "до порядка {order}"
    )


class SerializersCfg:
    """Настройки для сериализаторов."""

    RAMIFICATION = "ramification"
    ORDER = "order"
    TERMS = "terms"
    TERM_LENGTH = 5
    OPERATOR_TERM_LENGTH = 3
    PAIR_LENGTH = 2
    KIND = "kind"
    ENTRIES = "entries"
    ENTRY_LENGTH = 4
    TRUNCATION = "truncation"
    CONJECTURAL = "conjectural"
    CHAR = "char"
    OFFSET = "offset"
    LABEL = "label"
    RATIONAL_PAIR_ERROR = (
        "Ожидалась пара [числитель, знаменатель], получено {value}"
    )
    NOT_AN_INTEGER_ERROR = "Ожидалось целое число, получено {value}"
    EXPONENT_KEY_ERROR = "Показатель должен быть целым, получено {key}"
    NEGATIVE_POWER_ERROR = "Степень должна быть >= 0, получено {power}"
    SERIES_FORMAT_ERROR = "Неверный формат ряда: {error}"
    OPERATOR_FORMAT_ERROR = "Неверный формат оператора: {error}"
    OPERATOR_TERM_ERROR = (
        "Ожидалась тройка [показатель, коэффициент, степень θ], "
        "получено {value}"
    )
    TABLE_FORMAT_ERROR = "Неверный формат таблицы инвариантов: {error}"
    CHAR_FORMAT_ERROR = "Неверная запись K-класса: {error}"
    BRANE_FORMAT_ERROR = "Неверная запись браны: {error}"


class PicardFuchsCfg:
    """Настройки для операторов Пикара-Фукса."""

    CY_INHOMOGENEITY = Fraction(15, 8)
    LG_INHOMOGENEITY = Fraction(9375, 8)
    NEGATIVE_THETA_POWER_ERROR = (
        "Степень θ должна быть >= 0, получено {power}"
    )
    INEXACT_OPERATOR_ERROR = (
        "Коэффициенты оператора должны быть точными рациональными числами"
    )
    CHANGE_OF_VARIABLE_ERROR = (
        "Замена q = t^(-5) требует оператора с целыми степенями q"
    )
    NOT_INDICIAL_ROOT_ERROR = (
        "{root} не является корнем кратности > {rank} определяющего "
        "многочлена (кратность {multiplicity})"
    )
    RESONANCE_ERROR = (
        "Рекуррентное соотношение не разрешимо на показателе {exponent}"
    )
    FROBENIUS_LOG = (
        "Решение Фробениуса: корень {root}, ранг {rank}, порядок {order}, "
        "блоков {blocks}"
    )


class IFunctionCfg:
    """Настройки для I-функций и проверок тождеств."""

    COMPONENTS = 4
    Q_VARIABLE = "q"
    T_VARIABLE = "t"
    LG_SIGNS = (1, 1, -1, -1)
    P_PAIRING = Fraction(1, 2)
    POSITIVE_PHASE = "positive"
    NEGATIVE_PHASE = "negative"
    CY_SECTOR = "e·H^{k}"
    LG_SECTOR = "phi_{k}"
    P_SECTOR = "p"
    P_MINUS_SECTOR = "p_-"
    I_CY_LABEL = "I^CY_{k}"
    I_LG_LABEL = "I^LG_{k}"
    T_CY_LABEL = "T^CY"
    T_LG_LABEL = "T^LG"
    QUINTIC = "quintic"
    EXTENDED = "extended"
    LG = "lg"
    INHOMOGENEOUS = "inhomogeneous"
    CY_SIDE = "CY"
    LG_SIDE = "LG"
    PRINCIPAL = "principal"
    CONJUGATE = "conjugate"
    MIN_BITS = 64
    CONTINUATION_ORDER = Fraction(60)
    IDENTITY_PASSED = "ok"
    IDENTITY_FAILED = "FAIL"
    IDENTITY_STR = "{side}, m={m}: {lhs} = {rhs} [{status}]"
    COMPONENT_ERROR = "Номер компоненты должен быть 0..3, получено {k}"
    DEGREE_ERROR = "Степень должна быть >= 0, получено {d}"
    VARIABLE_ERROR = "Неизвестная переменная ряда: {variable}"
    PHASE_ERROR = (
        "Фаза должна быть positive или negative, получено {phase}"
    )
    SECTOR_ERROR = "Сектор {label} отсутствует в фазе {phase}"
    PF_CHECK_KIND_ERROR = "Неизвестный набор проверок: {kind}"
    PF_CHECK_LOG = "Проверки {kind}: пройдено {passed} из {total}"
    M_MAX_ERROR = "m_max должно быть >= 0, получено {m_max}"
    OSCILLATORY_LOG = (
        "Осцилляционные тождества: проверок {checks}, нарушено {failures}"
    )
    OSCILLATORY_FAILED_ERROR = (
        "Осцилляционные тождества не выполнены: {failures}"
    )
    GAMMA_QUOTIENT_LOG = "Отношение гамма-функций: {terms} членов"
    PRECISION_ERROR = (
        "Точность {bits} бит меньше минимальной ({minimum} бит)"
    )
    CONVENTION_ERROR = (
        "Соглашение должно быть principal или conjugate, "
        "получено {convention}"
    )
    CONTINUATION_LOG = (
        "Продолжение через стену: t={t}, значение {value}, порядок {order}"
    )


class EnumerativeCfg:
    """Настройки для извлечения перечислительных инвариантов."""

    DEGREE = 5
    DISK_LEADING = 30
    LG_MIN_ORDER = Fraction(5, 2)
    CLOSED_FORM = "closed-form"
    FROBENIUS = "frobenius"
    GW_CLOSED = "gw_closed"
    GW_CLOSED_BPS = "gw_closed_bps"
    DISK_CY = "disk_cy"
    DISK_CY_REDUCED = "disk_cy_reduced"
    DISK_LG = "disk_lg"
    DISK_KINDS = (DISK_CY, DISK_CY_REDUCED, DISK_LG)
    TABLE_STR = "{kind}: {entries} (до степени {truncation})"
    SOURCE_ERROR = (
        "Источник должен быть closed-form или frobenius, получено {source}"
    )
    MAX_DEGREE_ERROR = (
        "Наибольшая степень должна быть >= 1, получено {max_degree}"
    )
    ORDER_ERROR = "Порядок должен быть не меньше 5/2, получено {order}"
    CLASSICAL_TERM_ERROR = (
        "Классическая часть ранга {rank} не равна ожидаемой: {top}"
    )
    RESIDUAL_LOG_ERROR = (
        "После замены координат остались логарифмы: {residual}"
    )
    MIRROR_MAP_LOG = (
        "Зеркальное отображение до порядка {order}: старший член "
        "{leading}, обратное до порядка {inverse_order}"
    )


class GlsmCfg:
    """Настройки для комбинаторики GLSM."""

    QUINTIC_MODEL = "quintic"
    EXTENDED_MODEL = "extended"
    POINCARE_VARIABLE = "t"
    P_COORDINATE = "p"
    FERMAT_DEGREE = 5
    FERMAT_VARIABLES = 5
    AMBIENT_CLASSES = 4
    MIDDLE_DEGREE = 3
    NARROW_SHIFT = 4
    QUINTIC_FAN = (
        (1, 1, 1, 1, 1, 1),
        (1, 0, 0, 0, -1, 0),
        (0, 1, 0, 0, -1, 0),
        (0, 0, 1, 0, -1, 0),
        (0, 0, 0, 1, -1, 0),
    )
    EXTENDED_FAN = (
        (1, 1, 1, 1, 1, 1, 1, 1),
        (1, 0, 0, 0, -1, 0, 0, 0),
        (0, 1, 0, 0, -1, 0, 0, 0),
        (0, 0, 1, 0, -1, 0, 0, 0),
        (0, 0, 0, 1, -1, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 1, 1),
        (0, 0, 0, 0, 2, 0, -1, 1),
    )
    COMPONENT_LABEL = "1_{a}^{sign}"
    ZETA_SIGN_ERROR = "Знак ζ должен быть 1 или -1, получено {zeta}"
    ZERO_WEIGHT_ERROR = "Модель {model} содержит координату веса 0"
    EMPTY_PHASE_ERROR = "У модели {model} нет антиконусов при ζ={zeta}"
    NO_FAN_ERROR = "Для модели {model} веер не задан"
    FAN_KERNEL_ERROR = (
        "Ядро матрицы веера модели {model} имеет размерность "
        "{dimension}, ожидалась 1"
    )
    NOT_EFFECTIVE_ERROR = (
        "Степень {degree} не эффективна для модели {model} при ζ={zeta}"
    )
    UNKNOWN_MODEL_ERROR = "Неизвестная модель {model}; доступны: {known}"
    EMPTY_CORE_WARNING = (
        "Элемент Box {label} не имеет ядра и исключён из суммы"
    )
    FRACTIONAL_AGE_WARNING = (
        "Элемент Box {label} имеет дробный возраст {age} и исключён"
    )
    BOX_LOG = "Box модели {model} при ζ={zeta}: {count} элементов"
    LOOP_SPACE_LOG = "Пространство петель: {data}"


class BranesCfg:
    """Настройки для K-классов бран."""

    CHAR_VARIABLE = "T"
    EXTENDED_WALCHER = "extended-walcher"
    STRUCTURE = "structure"
    QUINTIC_TC = "quintic-tc"
    LG_DISK = "lg-disk"
    INLINE_LABEL = "inline"
    UNKNOWN_BRANE_ERROR = "Неизвестная брана {name}; доступны: {known}"
    CHAR_FORMAT_ERROR = "Неверная запись K-класса: {value}"
    HALF_WIDTH_ERROR = (
        "Полуширина окна должна быть положительной, получено {half_width}"
    )
    ZERO_CHAR_ORDER_ERROR = "Порядок нуля нулевого класса не определён"
    DECOMPOSITION_ERROR = (
        "Класс {char} не раскладывается: остаток {remainder}"
    )
    DECOMPOSITION_PARITY_ERROR = (
        "Класс {char} не обращается в нуль в T = -1: значение {value}"
    )
    DECOMPOSITION_LOG = (
        "Разложение {char} = ({f})·(1 + T^-1) + ({g})·(1 - T^-5)"
    )
    WINDOW_LOG = (
        "Окно для {char} со сдвигом {offset}: нарушения {violations}"
    )


class MellinBarnesCfg:
    """Настройки для интегралов Меллина-Барнса."""

    MIN_BITS = 53
    GUARD_BITS = 20
    AUTO = "auto"
    CONTOUR = "contour"
    RESIDUES = "residues"
    LEFT = "left"
    RIGHT = "right"
    CAUCHY_NODES = 64
    CAUCHY_NODES_PER_ORDER = 16
    MAX_TERMS = 4000
    TERMS_MARGIN = 10
    RESIDUE_MARGIN = 4.0
    BORDERLINE_TOLERANCE = 1e-9
    TAIL_MARGIN = 10.0
    TAIL_ITERATIONS = 8
    MAX_HEIGHT = 4096.0
    MIN_PIECES = 4
    QUADRATURE = "tanh-sinh"
    RICHARDSON_EPSILON = 0.5
    RICHARDSON_LEVELS = 4
    PRECISION_ERROR = (
        "Точность {bits} бит меньше минимальной ({minimum} бит)"
    )
    ZERO_Q_ERROR = "Параметр q не может быть нулём"
    CONTOUR_ERROR = (
        "Контур Re σ = {delta} пересекает полюс Γ({a}σ + {b})"
    )
    POLE_ERROR = "Гамма-функция имеет полюс в {pole}"
    NOT_A_POLE_ERROR = "В точке {location} нет полюса"
    SIDE_ERROR = "Сторона замыкания должна быть left или right: {side}"
    METHOD_ERROR = (
        "Метод должен быть auto, contour или residues, получено {method}"
    )
    DIVERGENT_ERROR = (
        "Вставка T^{exponent} растёт в направлении {side}: "
        "скорость убывания {rate}"
    )
    HEIGHT_ERROR = (
        "Высота отсечения {height} больше допустимой {maximum}"
    )
    BORDERLINE_ERROR = (
        "Для {label} обе скорости убывания пограничные, интеграл "
        "не сходится абсолютно"
    )
    SPOUGE_LOG = "Приближение Спужа: {bits} бит, a = {a}"
    RESIDUE_LOG = (
        "Сумма вычетов ({side}): {terms} полюсов, ненулевых {nonzero}"
    )
    REGIME_WARNING = (
        "Замыкание {side} при |q| = {q} вне области сходимости "
        "(порог {threshold})"
    )
    RATIO_WARNING = (
        "Отношение последних вычетов ({side}) равно {ratio}, "
        "ряд сходится медленно"
    )
    CONTOUR_LOG = (
        "Контур {label}: κ+ = {upper}, κ- = {lower}, отрезков {pieces}"
    )
    RICHARDSON_LOG = (
        "Пограничное направление для {label}: экстраполяция по θ = "
        "{theta}, уровней {levels}"
    )
    WINDOW_WARNING = (
        "Брана {brane} не лежит в окне модели {model}: {violations}"
    )
    HEMISPHERE_LOG = "Z({model}, {brane}) при q = {q} ({method}): {value}"


class NormalizationCfg:
    """Настройки для таблицы нормировочных множителей."""

    SIGN = -1
    PAIRING = -8
    GROUPOID_MEASURE = Fraction(1, 2)
    DISK_SERIES_FACTOR = 2
    TC_COEFF = 32
    HEMISPHERE_SIGN = "hemisphere_sign"
    HEMISPHERE_SIGN_ORIGIN = (
        "Знак перед интегралом в определении полусферной статсуммы"
    )
    PAIRING_PREFACTOR = "pairing_prefactor"
    PAIRING_PREFACTOR_ORIGIN = (
        "Множитель спаривания центрального заряда матричной факторизации"
    )
    KOSZUL_HALF_INTEGER = "koszul_half_integer"
    KOSZUL_HALF_INTEGER_ORIGIN = (
        "Вставка T^2·(1 - T^-1)^5 при T = e^(2πiσ), σ полуцелое: "
        "значение 32"
    )
    BMU2_MEASURE = "bmu2_measure"
    BMU2_MEASURE_ORIGIN = "Мера группоида Bμ_2: ∫1 = 1/2"
    GAMMA_HALF_SIXTH = "gamma_half_sixth"
    GAMMA_HALF_SIXTH_ORIGIN = "Γ(1/2)^6 = π^3 из шести полуцелых полюсов"
    DISK_SERIES = "disk_series"
    DISK_SERIES_ORIGIN = (
        "Сектор p несёт -2·T^CY; множитель 1/2 нормирует ряд к T^CY"
    )
    TC_PREFACTOR = "tc_prefactor"
    TC_PREFACTOR_ORIGIN = (
        "Брана 𝔅_c квинтики при arg q = π: 32π^2 перед Σ c_m·I^LG_(m-1)"
    )
    OPEN_CLOSED_CHAIN = (
        HEMISPHERE_SIGN,
        PAIRING_PREFACTOR,
        KOSZUL_HALF_INTEGER,
        BMU2_MEASURE,
        GAMMA_HALF_SIXTH,
        DISK_SERIES,
    )


class CliCfg:
    """Настройки для командной строки."""

    PROG = "mirrorlab"
    DESCRIPTION = (
        "Точные ряды, инварианты и численные центральные заряды "
        "открытой зеркальной симметрии квинтики"
    )
    EXIT_OK = 0
    EXIT_DOMAIN = 1
    EXIT_VERIFICATION = 2
    EXIT_USAGE = 64
    JSON = "json"
    CSV = "csv"
    FORMATS = (JSON, CSV)
    SCHEMA = "schema"
    SCHEMA_VERSION = 1
    COMMAND = "command"

    SERIES = "series"
    PF_CHECK = "pf-check"
    GW = "gw"
    DISK = "disk"
    LG = "lg"
    OSCILLATORY = "oscillatory"
    GLSM = "glsm"
    BRANE = "brane"
    CENTRAL_CHARGE = "central-charge"
    WALLCROSS = "wallcross"
    SELFTEST = "selftest"

    I_CY = "i-cy"
    I_LG = "i-lg"
    T_CY = "t-cy"
    T_LG = "t-lg"
    SERIES_KINDS = (I_CY, I_LG, T_CY, T_LG)
    SOURCES = (EnumerativeCfg.CLOSED_FORM, EnumerativeCfg.FROBENIUS)
    ZETA_VALUES = ("1", "+1", "-1")
    INSPECT = "inspect"
    DECOMPOSE = "decompose"
    BRANE_ACTIONS = (DECOMPOSE, "check", "show")
    DEFAULT_MODEL = GlsmCfg.EXTENDED_MODEL
    DEFAULT_BRANE = BranesCfg.EXTENDED_WALCHER
    DEFAULT_MAX_DEGREE = 5
    DEFAULT_M_MAX = 25
    DEFAULT_DEGREES = 3

    ORDER_HELP = "Порядок усечения рядов (рациональное число)"
    BITS_HELP = "Рабочая точность в битах"
    FORMAT_HELP = "Формат вывода: json или csv"
    OUTPUT_HELP = "Файл для вывода (по умолчанию stdout)"
    PLOT_HELP = "CSV-файл с точками (x, y) для построения графика"
    SERIES_HELP = "Ряды I^CY_k, I^LG_k, T^CY, T^LG"
    K_HELP = "Номер компоненты I-функции (0..3)"
    PF_CHECK_HELP = "Проверка уравнений Пикара-Фукса"
    GW_HELP = "Инварианты Громова-Виттена квинтики"
    DISK_HELP = "Дисковые инварианты вещественной квинтики"
    MAX_DEGREE_HELP = "Наибольшая степень в таблице"
    REDUCED_HELP = "Вычесть вклады кратных накрытий"
    SOURCE_HELP = "Источник рядов: closed-form или frobenius"
    LG_HELP = "LG-отображение и гипотетические дисковые числа"
    OSCILLATORY_HELP = "Осцилляционные тождества в Q[√π]"
    M_MAX_HELP = "Наибольший номер m"
    GLSM_HELP = "Антиконусы, Box, многочлены Пуанкаре, пространства петель"
    ZETA_HELP = "Знак параметра ζ: 1 или -1"
    DEGREES_HELP = "Степени петель через запятую, например 1,1/2"
    BRANE_COMMAND_HELP = "Разложение и правило ограничения градуировки"
    BRANE_HELP = (
        "Имя браны ({known}) или K-класс в JSON, например "
        "{{\"2\": 16, \"-3\": -16}}"
    )
    CENTRAL_CHARGE_HELP = "Центральный заряд Z(𝔅) через интеграл"
    Q_HELP = "Параметр q, вещественный или комплексный (1e-3, 1e4-2j)"
    ARG_HELP = "Аргумент q в радианах, заменяет главную ветвь"
    N_TERMS_HELP = "Число членов суммы вычетов"
    WALLCROSS_HELP = "Продолжение браны Уолчера через стену"
    SELFTEST_HELP = "Набор приёмочных проверок"
    QUICK_HELP = "Только точные проверки"

    KIND = "kind"
    K = "k"
    ORDER = "order"
    PASSED = "passed"
    CHECKS = "checks"
    LABEL = "label"
    RESIDUAL = "residual"
    DETAIL = "detail"
    MIRROR_MAP = "mirror_map"
    MODEL = "model"
    PHASE = "zeta"
    ANTICONES = "minimal_anticones"
    FAN_RELATION = "fan_relation"
    BOX = "box"
    ELEMENT = "element"
    AGE = "age"
    FIXED = "fixed"
    CR_POINCARE = "chen_ruan_poincare"
    STATE_SPACE = "state_space_poincare"
    LOOP_SPACES = "loop_spaces"
    DEGREE = "degree"
    DIM_V = "dim_V"
    DIM_W = "dim_W"
    DIM_L = "dim_L"
    RANK_E = "rank_E"
    VIRTUAL_DIM = "virtual_dim"
    F = "f"
    G = "g"
    WINDOW = "window"
    HALF_WIDTH = "half_width"
    VIOLATIONS = "violations"
    Q = "q"
    ARG = "arg"
    VALUE_RE = "value_re"
    VALUE_IM = "value_im"
    EST_ERROR = "est_error"
    METHOD = "method"
    N_TERMS = "n_terms"
    CONVENTION = "convention"
    TOTAL = "total"
    SERIES_VALUE = "series_value"
    REL_DIFFERENCE = "rel_difference"
    M_MAX = "m_max"
    SIDE = "side"
    M = "m"
    LHS = "lhs"
    RHS = "rhs"

    SERIES_HEADER = (
        "exponent_num",
        "exponent_den",
        "coeff_num",
        "coeff_den",
        "log_power",
    )
    CHECK_HEADER = ("label", "passed")
    TABLE_HEADER = ("degree_num", "degree_den", "value_num", "value_den")
    BOX_HEADER = ("label", "age_num", "age_den", "fixed")
    PART_HEADER = ("part", "char")
    CHAR_HEADER = ("exponent", "coeff")
    VALUE_HEADER = (VALUE_RE, VALUE_IM)
    NAMED_VALUE_HEADER = ("name", VALUE_RE, VALUE_IM)
    IDENTITY_HEADER = ("side", "m", "lhs", "rhs", "passed")
    PLOT_HEADER = ("x", "y")

    SELFTEST_ORDER = Fraction(12)
    SELFTEST_ORACLE_ORDER = Fraction(10)
    SELFTEST_PF_KINDS = (
        IFunctionCfg.QUINTIC,
        IFunctionCfg.EXTENDED,
        IFunctionCfg.LG,
        IFunctionCfg.INHOMOGENEOUS,
    )
    SELFTEST_M_MAX = 25
    SELFTEST_SMALL_Q = "1e-5"
    SELFTEST_LARGE_Q = "1e4"
    SELFTEST_ARG = -pi / 2
    SELFTEST_SERIES_ORDER = Fraction(40)
    SELFTEST_TOLERANCE = 1e-12
    CASE_PF = "pf-annihilation"
    CASE_ORACLE = "frobenius-oracle"
    CASE_ENUMERATIVE = "enumerative"
    CASE_GLSM = "glsm"
    CASE_BRANES = "branes"
    CASE_OSCILLATORY = "oscillatory"
    CASE_OPEN_CLOSED = "open-closed"
    CASE_WALLCROSS = "wallcross"

    USAGE_ERROR = "{usage}ошибка: {error}\n"
    RATIONAL_ERROR = "Не рациональное число: {value}"
    ZETA_ERROR = "Знак ζ должен быть 1 или -1, получено {value}"
    Q_ERROR = "Не удалось разобрать q: {value}"
    PF_CHECK_FAILED = "Проверки {kind} не пройдены: {labels}"
    SELFTEST_FAILED = "Не пройдены проверки: {names}"
    SELFTEST_LOG = "Проверка {name}: {passed}"
    GLSM_DETAIL = "Box {counts}, виртуальные размерности {dims}"
    BRANES_DETAIL = "f = {f}, g = {g}"
    VERIFICATION_LOG = "Проверка не пройдена: {error}"
    DOMAIN_LOG = "Ошибка: {error}"
    OUTPUT_ERROR = "Не удалось записать {path}: {error}"
