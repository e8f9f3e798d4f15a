"""
Ponto de entrada da linha de comando.

Spaceability Lab - certificados numéricos das construções de espaçabilidade.

Comandos:
    lab run <cenario.toml> [--out PATH] [--seed N]
    lab trajectory <cenario.toml> --j J --csv PATH
    lab print-default-config <kind>

Códigos de saída: 0 certified, 1 failed, 2 undecided, 64 erro de configuração.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from src.config.logging import get_logger, setup_logging
from src.config.settings import get_settings
from src.models.report import EXIT_CONFIG_ERROR
from src.models.scenario import ScenarioKind, default_scenario, load_scenario, to_toml
from src.services.suite_runner import get_suite_runner
from src.services.trajectory_export import emit_trajectory
from src.utils.errors import LabError


class LabArgumentParser(argparse.ArgumentParser):
    """Erros de uso saem com 64: o código 2 é reservado para undecided."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG_ERROR, f"{self.prog}: erro: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = LabArgumentParser(
        prog="lab",
        description="Certificados numéricos para o campo de Dieudonné em c₀ e os operadores de espalhamento.",
        epilog=(
            "LAB_BUDGET_SCALE multiplica todos os orçamentos inteiros; "
            "LAB_REPORT_TIMING inclui o tempo no relatório."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Executa o conjunto de verificações de um cenário")
    run.add_argument("scenario", type=Path, help="Arquivo TOML do cenário")
    run.add_argument("--out", type=Path, default=None, help="Grava o relatório JSON neste caminho (padrão: stdout)")
    run.add_argument("--seed", type=int, default=None, help="Sobrescreve a semente do cenário")

    trajectory = commands.add_parser("trajectory", help="Exporta a trajetória (t, u, bound) da testemunha")
    trajectory.add_argument("scenario", type=Path, help="Arquivo TOML de um cenário peano")
    trajectory.add_argument("--j", type=int, required=True, help="Posição j dentro do bloco da testemunha")
    trajectory.add_argument("--csv", type=Path, required=True, help="Arquivo CSV de saída")

    defaults = commands.add_parser("print-default-config", help="Imprime o cenário padrão de um tipo em TOML")
    defaults.add_argument("kind", choices=[kind.value for kind in ScenarioKind], help="Tipo do cenário")
    return parser


def _run(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    if args.seed is not None:
        if args.seed < 0:
            raise LabError(f"--seed deve ser >= 0, recebido {args.seed}")
        scenario = scenario.model_copy(update={"seed": args.seed})

    report = get_suite_runner().run(scenario)
    document = report.to_json() + "\n"
    if args.out is None:
        sys.stdout.write(document)
    else:
        args.out.write_text(document, encoding="utf-8")
    return report.exit_code


def _trajectory(args: argparse.Namespace) -> int:
    emit_trajectory(load_scenario(args.scenario), args.j, args.csv)
    return 0


def _print_default(args: argparse.Namespace) -> int:
    sys.stdout.write(to_toml(default_scenario(args.kind)))
    return 0


_HANDLERS = {
    "run": _run,
    "trajectory": _trajectory,
    "print-default-config": _print_default,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Executa a CLI e devolve o código de saída."""
    args = build_parser().parse_args(argv)
    logger = get_logger("cli")

    try:
        setup_logging()
        settings = get_settings()
        logger.debug("Comando recebido", command=args.command, environment=settings.app.env)
        return _HANDLERS[args.command](args)
    except ValidationError as exc:
        logger.error("Configuração de ambiente inválida", command=args.command, error=str(exc))
        return EXIT_CONFIG_ERROR
    except LabError as exc:
        logger.error("Erro de configuração", command=args.command, error=str(exc))
        return EXIT_CONFIG_ERROR
    except OSError as exc:
        logger.error("Erro de E/S", command=args.command, error=str(exc))
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())
