"""Настройки проекта."""

from fractions import Fraction

from decouple import config

BITS = config("MIRRORLAB_BITS", default=192, cast=int)

ORDER = config("MIRRORLAB_ORDER", default="12", cast=Fraction)

RAMIFICATION = config("MIRRORLAB_RAMIFICATION", default=10, cast=int)

LOG_LEVEL = config("MIRRORLAB_LOG_LEVEL", default="WARNING")

CONTOUR_DELTA = config(
    "MIRRORLAB_CONTOUR_DELTA", default="1/10", cast=Fraction
)

# Сериализаторы DRF работают без приложений Django, поэтому переводы
# сообщений об ошибках отключены.
USE_I18N = False

REST_FRAMEWORK = {
    "UNAUTHENTICATED_USER": None,
}
