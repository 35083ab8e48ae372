"""Command-line client for the bridge server.

Online commands (say, anim, pose, prefetch, estop, state) talk to a
running server over HTTP; `animatron serve` starts one.  lint and
workspace are offline: they run against the local geometry with no server
and no network.
"""

from __future__ import annotations

import json
import math
import os
import sys
from pathlib import Path

import click
import httpx

from animatron.config import DEFAULT_HOST, DEFAULT_PORT, load_config


def _client(ctx) -> httpx.Client:
    return httpx.Client(base_url=ctx.obj["server"], timeout=60.0)


def _fail(message: str, code: int = 1):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _request(ctx, method: str, path: str, **kwargs) -> dict:
    try:
        with _client(ctx) as client:
            resp = client.request(method, path, **kwargs)
    except httpx.ConnectError:
        _fail(
            f"cannot reach server at {ctx.obj['server']} (start one with `animatron serve`)",
            code=2,
        )
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        _fail(f"{detail}")
    return resp.json()


def _print_report(report: dict) -> None:
    for rec in report["records"]:
        detail = f"  {rec['detail']}" if rec["detail"] else ""
        click.echo(f"{rec['scheduled']:8.3f}s  {rec['sink']:<4} {rec['kind']:<13}{detail}")
    click.echo(
        f"-- {len(report['records'])} events, max deviation "
        f"{report['max_deviation'] * 1000:.2f} ms"
        + (", PREEMPTED" if report["preempted"] else "")
    )
    if report.get("error"):
        _fail(report["error"])


@click.group()
@click.option(
    "--server",
    default=lambda: os.environ.get("ANIMATRON_SERVER", f"http://{DEFAULT_HOST}:{DEFAULT_PORT}"),
    show_default="env ANIMATRON_SERVER or local default",
    help="Bridge server URL.",
)
@click.option("--robot", default="default", show_default=True, help="Robot id (namespace).")
@click.pass_context
def main(ctx, server, robot):
    """Control a tabletop expressive robot through the bridge server."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server.rstrip("/")
    ctx.obj["robot"] = robot


@main.command()
@click.option("--host", default=None)
@click.option("--port", type=int, default=None)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option(
    "--face-dir",
    type=click.Path(exists=True, file_okay=False),
    default=None,
    help="Built face client directory to serve at /face.",
)
@click.pass_context
def serve(ctx, host, port, config_path, face_dir):
    """Run the bridge server (blocks)."""
    import uvicorn

    from animatron.server.app import create_app

    cfg = load_config(
        config_path, host=host, port=port, face_dir=Path(face_dir) if face_dir else None
    )
    uvicorn.run(create_app(cfg), host=cfg.host, port=cfg.port, log_level="info")


@main.command()
@click.argument("text")
@click.option("--no-wait", is_flag=True, help="Return immediately instead of streaming the run.")
@click.pass_context
def say(ctx, text, no_wait):
    """Speak dialogue text or a saved library key, with synced behaviors."""
    report = _request(
        ctx,
        "POST",
        f"/robot/{ctx.obj['robot']}/say",
        json={"request": text, "wait": not no_wait},
    )
    _print_report(report)


@main.group()
def anim():
    """Animation clip commands."""


@anim.command("play")
@click.argument("name")
@click.pass_context
def anim_play(ctx, name):
    """Play a clip from the library."""
    report = _request(ctx, "POST", f"/robot/{ctx.obj['robot']}/anim", json={"name": name})
    _print_report(report)


@anim.command("list")
@click.pass_context
def anim_list(ctx):
    for name in _request(ctx, "GET", "/clips")["clips"]:
        click.echo(name)


@main.command()
@click.argument("x", type=float)
@click.argument("y", type=float)
@click.argument("z", type=float)
@click.argument("roll", type=float)
@click.argument("pitch", type=float)
@click.argument("yaw", type=float)
@click.option("--radians", is_flag=True, help="Angles are radians (default: degrees).")
@click.pass_context
def pose(ctx, x, y, z, roll, pitch, yaw, radians):
    """Move the platform to a pose (meters; angles in degrees)."""
    if not radians:
        roll, pitch, yaw = (math.radians(a) for a in (roll, pitch, yaw))
    result = _request(
        ctx,
        "POST",
        f"/robot/{ctx.obj['robot']}/pose",
        json={"x": x, "y": y, "z": z, "roll": roll, "pitch": pitch, "yaw": yaw},
    )
    angles = ", ".join(f"{math.degrees(a):.1f}" for a in result["angles"])
    click.echo(f"servo angles [deg]: {angles}")
    click.echo(f"ticks: {result['ticks']}")


@main.command()
@click.argument("library", type=click.Path(exists=True), required=False)
@click.pass_context
def prefetch(ctx, library):
    """Pre-synthesize dialogue audio into the server cache for offline runs."""
    body = {}
    if library:
        body["entries"] = json.loads(Path(library).read_text(encoding="utf-8"))
    result = _request(ctx, "POST", "/prefetch", json=body)
    click.echo(f"{result['entries']} entries prefetched ({result['cache_entries']} cached files)")


@main.command()
@click.option("--engage/--release", default=True)
@click.pass_context
def estop(ctx, engage):
    """Engage or release the emergency stop latch."""
    _request(ctx, "POST", f"/robot/{ctx.obj['robot']}/estop", json={"engaged": engage})
    click.echo("e-stop engaged" if engage else "e-stop released (send `enable` to resume)")


@main.command()
@click.pass_context
def enable(ctx):
    """Re-enable torque after an e-stop release."""
    _request(ctx, "POST", f"/robot/{ctx.obj['robot']}/enable")
    click.echo("torque enabled")


@main.command()
@click.pass_context
def state(ctx):
    """Print the controller state snapshot."""
    click.echo(json.dumps(_request(ctx, "GET", f"/robot/{ctx.obj['robot']}/state"), indent=2))


@main.command()
@click.argument("clip_file", type=click.Path(exists=True))
@click.option("--geometry", "geometry_path", type=click.Path(exists=True), default=None)
def lint(clip_file, geometry_path):
    """Validate a clip file offline (schema + kinematic reach per frame)."""
    from animatron.animation.clip import ClipError
    from animatron.animation.library import lint_clip
    from animatron.animation.parser import load_clip
    from animatron.kinematics.geometry import default_geometry, load_geometry

    try:
        clip = load_clip(clip_file)
    except ClipError as e:
        _fail(str(e))
    geom = load_geometry(geometry_path) if geometry_path else default_geometry()
    report = lint_clip(clip, geom)
    if report.ok:
        click.echo(f"{report.clip}: OK ({report.frame_count} frames)")
    else:
        for t, reason in report.invalid_frames[:10]:
            click.echo(f"  frame at {t:.3f}s: {reason}", err=True)
        _fail(f"{report.clip}: {len(report.invalid_frames)} invalid frames")


@main.command()
@click.option("--translation-resolution-mm", default=2.0, show_default=True)
@click.option("--tilt-resolution-deg", default=1.0, show_default=True)
@click.option("--geometry", "geometry_path", type=click.Path(exists=True), default=None)
@click.option("--json", "json_path", type=click.Path(), default=None, help="Write full report JSON.")
@click.option("--csv", "csv_path", type=click.Path(), default=None, help="Write sample dump CSV.")
def workspace(translation_resolution_mm, tilt_resolution_deg, geometry_path, json_path, csv_path):
    """Sample the reachable workspace offline and print the claims."""
    from animatron.kinematics.geometry import default_geometry, load_geometry
    from animatron.kinematics.workspace import sample_workspace

    geom = load_geometry(geometry_path) if geometry_path else default_geometry()
    report = sample_workspace(
        geom,
        translation_resolution=translation_resolution_mm / 1000.0,
        tilt_resolution=math.radians(tilt_resolution_deg),
    )
    claims = json.loads(report.to_json())["geometry_claims"]
    for axis, value in claims["max_translation_m"].items():
        click.echo(f"max translation {axis}: {value * 100:.1f} cm")
    click.echo(f"max tilt from vertical: {claims['max_tilt_deg']:.1f} deg")
    click.echo(f"max yaw: {math.degrees(claims['max_yaw_rad']):.1f} deg")
    if json_path:
        Path(json_path).write_text(report.to_json(include_samples=True), encoding="utf-8")
        click.echo(f"wrote {json_path}")
    if csv_path:
        report.write_csv(csv_path)
        click.echo(f"wrote {csv_path}")


if __name__ == "__main__":
    main()
