""" main.py

    Main Python script. It loads the environment configuration, prepares
    the logger and hands control to the levyruin command line.
"""

from config import SETTINGS, LevySettings

from levyruin.cli import RunSettings, cli
from levyruin.log import create_default_logger
from levyruin.quadrature import Quadrature


def run_settings(settings: LevySettings) -> RunSettings:
    return RunSettings(is_debug=settings.debug_mode, exit_budget=settings.exit_budget, workers=settings.workers)


def main():
    logger = create_default_logger(SETTINGS.debug_mode, SETTINGS.log_dir)
    Quadrature.limit = SETTINGS.quad_limit

    settings = run_settings(SETTINGS)
    logger.debug(f'Starting with {settings}')
    cli(obj=settings)


if __name__ == "__main__":
    main()
