#!/usr/bin/env python
"""Утилита командной строки для вычислений mirrorlab."""
import sys


def main():
    """Запуск подкоманды."""
    try:
        from cli.main import main as run
    except ImportError as exc:
        raise ImportError(
            "Не удалось импортировать mirrorlab. Установлены ли зависимости "
            "из requirements.txt и запущена ли утилита из каталога "
            "mirrorlab?"
        ) from exc
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
