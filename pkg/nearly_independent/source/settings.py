import os

from pydantic import BaseModel, Field

# Жёсткий предел порядка: строка смежности занимает одно машинное слово,
# размер графа в graph6 кодируется одним байтом
MAX_ORDER = 62

ENV_BRUTE_FORCE_CAP = "NEARLY_INDEPENDENT_BRUTE_FORCE_CAP"
ENV_CANONICAL_CAP = "NEARLY_INDEPENDENT_CANONICAL_CAP"

DEFAULT_BRUTE_FORCE_CAP = 24
DEFAULT_CANONICAL_CAP = 10

# Встроенный генератор связных графов
MIN_BUILTIN_ORDER = 1
MAX_BUILTIN_ORDER = 8
# Внешние корпуса graph6 проверяются только до этого порядка
MAX_VERIFY_ORDER = 9

# Доля графов, которые при проверке пересчитываются полным перебором
DEFAULT_AUDIT_FRACTION = 0.01
AUDIT_RESOLUTION = 10_000

# Идентификаторы проверяемых утверждений
STATEMENT_SIZE = "size"
STATEMENT_STAR = "star"
STATEMENT_BRIDGE = "bridge"
STATEMENT_CUT_VERTEX = "cut-vertex"
STATEMENT_MAIN = "main"
STATEMENT_STRUCTURE = "structure"
STATEMENT_GOOD_MINIMUM = "good-minimum"
STATEMENTS = (
    STATEMENT_SIZE,
    STATEMENT_STAR,
    STATEMENT_BRIDGE,
    STATEMENT_CUT_VERTEX,
    STATEMENT_MAIN,
    STATEMENT_STRUCTURE,
    STATEMENT_GOOD_MINIMUM,
)

# Формат строки лога: тот же, что и в cli, но вывод уходит в stderr
LOG_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan> - <level>{message}</level>"
)


class Limits(BaseModel):
    """Пределы переборных алгоритмов, переопределяемые через переменные окружения."""

    brute_force_cap: int = Field(default=DEFAULT_BRUTE_FORCE_CAP, ge=0, le=MAX_ORDER)
    canonical_cap: int = Field(default=DEFAULT_CANONICAL_CAP, ge=0, le=MAX_ORDER)

    @classmethod
    def from_env(cls) -> "Limits":
        values = {}
        if os.environ.get(ENV_BRUTE_FORCE_CAP):
            values["brute_force_cap"] = os.environ[ENV_BRUTE_FORCE_CAP]
        if os.environ.get(ENV_CANONICAL_CAP):
            values["canonical_cap"] = os.environ[ENV_CANONICAL_CAP]
        return cls.model_validate(values)


def get_limits() -> Limits:
    """Текущие пределы (окружение читается при каждом вызове)."""
    return Limits.from_env()
