"""Пакет с настройками проекта."""

from django.conf import settings as django_settings

from config import settings


def configure_django() -> None:
    """Минимальные настройки Django, нужные сериализаторам DRF."""
    if not django_settings.configured:
        django_settings.configure(
            USE_I18N=settings.USE_I18N,
            REST_FRAMEWORK=settings.REST_FRAMEWORK,
        )
