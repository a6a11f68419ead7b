"""CLI commands using Typer."""

import logging
from contextlib import nullcontext
from pathlib import Path
from typing import Annotated, Any

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from src.config import settings
from src.exceptions import ConfigFileError, HermiteGutzmerError
from src.spectral.io import load_expansion, save_expansion
from src.spectral.operations import poisson_semigroup, semigroup
from src.verification import RunConfig, RunSummary, SuiteRegistry, SuiteSelection, load_config_file, run

app = typer.Typer(
    name="hermite-gutzmer",
    help="Numerical verification of Gutzmer's formula for Hermite expansions",
    add_completion=False,
)

console = Console()

EXIT_FAILED = 1
EXIT_BAD_INPUT = 2
MAX_LISTED_FAILURES = 20


@app.callback()
def main(
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Log per-case numerics")] = False,
):
    """Configure logging for every command."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else settings.log_level,
        format="%(asctime)s | %(levelname)s | %(name)s | %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )


def build_config(
    selection: SuiteSelection, config_path: Path | None, overrides: dict[str, Any]
) -> RunConfig:
    """Merge the config file with command-line flags (flags win) and validate.

    Raises:
        typer.Exit: With code 2 on a malformed file or an invalid field.
    """
    values: dict[str, Any] = {}
    if config_path is not None:
        try:
            values.update(load_config_file(config_path))
        except ConfigFileError as e:
            console.print(f"[red]Config error:[/red] {config_path}: {e}")
            raise typer.Exit(EXIT_BAD_INPUT)
    values.update({key: value for key, value in overrides.items() if value is not None})
    values["suite"] = selection.value

    try:
        return RunConfig.model_validate(values)
    except ValidationError as e:
        for error in e.errors():
            field = ".".join(str(part) for part in error["loc"]) or "config"
            console.print(f"[red]Invalid config:[/red] {field}: {error['msg']}")
        raise typer.Exit(EXIT_BAD_INPUT)


def print_summary(summary: RunSummary, out: Path | None) -> None:
    table = Table(title="Verification summary")
    table.add_column("Suites")
    table.add_column("Cases", justify="right")
    table.add_column("Passed", justify="right", style="green")
    table.add_column("Failed", justify="right", style="red")
    table.add_row(", ".join(summary.suites), str(summary.total), str(summary.passed), str(summary.failed))
    console.print(table)

    if summary.failing:
        console.print("\n[bold]Failing records:[/bold]")
        for name in summary.failing[:MAX_LISTED_FAILURES]:
            console.print(f"  [red]x[/red] {name}")
        if len(summary.failing) > MAX_LISTED_FAILURES:
            console.print(f"  [dim]... and {len(summary.failing) - MAX_LISTED_FAILURES} more[/dim]")
    if out:
        console.print(f"\n[green]Report written to:[/green] {out}")


def run_selection(selection: SuiteSelection, config_path: Path | None, overrides: dict[str, Any]) -> None:
    config = build_config(selection, config_path, overrides)
    console.print(
        Panel(
            f"[bold]Suite:[/bold] {selection.value}\n"
            f"[dim]Dimension:[/dim] {config.n}  [dim]K_max:[/dim] {config.k_max}  "
            f"[dim]Seed:[/dim] {config.seed}",
            title="Hermite-Gutzmer",
        )
    )

    try:
        stream = config.out.open("w", encoding="utf-8") if config.out else nullcontext()
    except OSError as e:
        console.print(f"[red]Error:[/red] Cannot write report to {config.out}: {e.strerror}")
        raise typer.Exit(EXIT_BAD_INPUT)
    try:
        with stream as handle:
            summary, _ = run(config, handle)
    except HermiteGutzmerError as e:
        console.print(f"\n[red]Run aborted:[/red] {e}")
        raise typer.Exit(EXIT_FAILED)

    print_summary(summary, config.out)
    if not summary.ok:
        raise typer.Exit(EXIT_FAILED)


def _suite_help(selection: SuiteSelection) -> str:
    if selection == SuiteSelection.ALL:
        return "Run every registered suite in name order."
    suite = SuiteRegistry.get_suite(selection.value)
    return f"Run the '{selection.value}' suite: {suite.description}." if suite else ""


def _add_suite_command(selection: SuiteSelection) -> None:
    def command(
        config_path: Annotated[
            Path | None, typer.Option("--config", "-c", help="Key-value config file")
        ] = None,
        n: Annotated[int | None, typer.Option("--n", "-n", help="Dimension of Monte Carlo checks")] = None,
        k_max: Annotated[int | None, typer.Option("--k-max", help="Truncation level")] = None,
        mc_k_max: Annotated[
            int | None, typer.Option("--mc-k-max", help="Truncation level for n >= 2")
        ] = None,
        gh_order: Annotated[int | None, typer.Option("--gh-order", help="Gauss-Hermite order")] = None,
        torus_points: Annotated[
            int | None, typer.Option("--torus-points", help="Torus points per angle")
        ] = None,
        mc_samples: Annotated[int | None, typer.Option("--mc-samples", help="Haar samples")] = None,
        seed: Annotated[int | None, typer.Option("--seed", help="Seed for Monte Carlo suites")] = None,
        workers: Annotated[int | None, typer.Option("--workers", "-w", help="Parallel workers")] = None,
        rtol: Annotated[float | None, typer.Option("--rtol", help="Deterministic tolerance")] = None,
        lemma_rtol: Annotated[float | None, typer.Option("--lemma-rtol", help="Lemma tolerance")] = None,
        strict_rtol: Annotated[
            float | None, typer.Option("--strict-rtol", help="Closed-form tolerance")
        ] = None,
        mc_sigma: Annotated[
            float | None, typer.Option("--mc-sigma", help="Standard errors allowed in MC checks")
        ] = None,
        mc_floor_rtol: Annotated[
            float | None, typer.Option("--mc-floor-rtol", help="Relative floor of MC tolerances")
        ] = None,
        decay_rtol: Annotated[
            float | None, typer.Option("--decay-rtol", help="Tolerance on fitted decay rates")
        ] = None,
        growth_slope: Annotated[
            float | None, typer.Option("--growth-slope", help="Largest allowed growth slope")
        ] = None,
        grid_points: Annotated[
            int | None, typer.Option("--grid-points", help="Phase points in the Gutzmer grid")
        ] = None,
        grid_radius: Annotated[
            float | None, typer.Option("--grid-radius", help="Half-width of the phase-point box")
        ] = None,
        out: Annotated[Path | None, typer.Option("--out", "-o", help="JSON-lines report path")] = None,
    ):
        overrides = {
            "n": n,
            "k_max": k_max,
            "mc_k_max": mc_k_max,
            "gh_order": gh_order,
            "torus_points": torus_points,
            "mc_samples": mc_samples,
            "seed": seed,
            "workers": workers,
            "rtol": rtol,
            "lemma_rtol": lemma_rtol,
            "strict_rtol": strict_rtol,
            "mc_sigma": mc_sigma,
            "mc_floor_rtol": mc_floor_rtol,
            "decay_rtol": decay_rtol,
            "growth_slope": growth_slope,
            "grid_points": grid_points,
            "grid_radius": grid_radius,
            "out": out,
        }
        run_selection(selection, config_path, overrides)

    app.command(name=selection.value, help=_suite_help(selection))(command)


for _selection in SuiteSelection:
    _add_suite_command(_selection)


@app.command()
def suites():
    """List registered verification suites."""
    table = Table(title="Verification suites")
    table.add_column("Name", style="bold")
    table.add_column("Description")
    for name in SuiteRegistry.list_suites():
        suite = SuiteRegistry.get_suite(name)
        table.add_row(name, suite.description if suite else "")
    console.print(table)


@app.command()
def inspect_expansion(
    path: Annotated[Path, typer.Argument(help="Expansion file")],
):
    """
    Show dimension, truncation level and level norms of an expansion file.

    Example:
        hermite-gutzmer inspect-expansion data/expansions/h0_plus_half_h3
    """
    if not path.exists():
        console.print(f"[red]Error:[/red] Expansion file not found: {path}")
        raise typer.Exit(EXIT_BAD_INPUT)
    try:
        F = load_expansion(path)
    except HermiteGutzmerError as e:
        console.print(f"[red]Error:[/red] {path}: {e}")
        raise typer.Exit(EXIT_BAD_INPUT)

    console.print(
        Panel(
            f"[bold]n:[/bold] {F.n}\n[bold]K_max:[/bold] {F.k_max}\n"
            f"[bold]Coefficients:[/bold] {len(F.coeffs)}\n"
            f"[bold]Norm squared:[/bold] {F.norm_squared():.12g}",
            title=str(path),
        )
    )
    table = Table(title="Level norms")
    table.add_column("k", justify="right")
    table.add_column("rho_k", justify="right")
    for k, rho in enumerate(F.level_norms()):
        if rho > 0:
            table.add_row(str(k), f"{rho:.12g}")
    console.print(table)


@app.command()
def smooth_expansion(
    source: Annotated[Path, typer.Argument(help="Input expansion file")],
    target: Annotated[Path, typer.Argument(help="Output expansion file")],
    t: Annotated[float, typer.Option("--t", help="Semigroup time t > 0")],
    poisson: Annotated[
        bool, typer.Option("--poisson", help="Use e^(-2 sqrt(k) t) instead of e^(-(2k+n) t)")
    ] = False,
):
    """Apply the Hermite (or Hermite-Poisson) semigroup to an expansion and save it."""
    if not source.exists():
        console.print(f"[red]Error:[/red] Expansion file not found: {source}")
        raise typer.Exit(EXIT_BAD_INPUT)
    try:
        F = load_expansion(source)
        smoothed = poisson_semigroup(F, t) if poisson else semigroup(F, t)
    except HermiteGutzmerError as e:
        console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(EXIT_BAD_INPUT)

    save_expansion(smoothed, target)
    console.print(
        f"[green]Saved[/green] {target}: norm squared {F.norm_squared():.6g} -> {smoothed.norm_squared():.6g}"
    )


@app.command()
def version():
    """Show version information."""
    console.print("[bold]Hermite-Gutzmer[/bold] v0.1.0")
    console.print("Numerical verification of Gutzmer's formula for Hermite expansions")


if __name__ == "__main__":
    app()
