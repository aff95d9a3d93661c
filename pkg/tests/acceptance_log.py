"""Shared record of acceptance outcomes, printed at the end of the run."""

from contextlib import contextmanager

RESULTS: dict = {}


def record(key: int, ok: bool, title: str, detail: str = "") -> None:
    RESULTS[key] = (ok, title, detail)
    print(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else ""))


@contextmanager
def criterion(key: int, title: str):
    """Run a criterion body; its outcome is recorded whether it passes or not."""
    info: dict = {"detail": ""}
    try:
        yield info
    except BaseException as exc:
        text = str(exc).strip()
        msg = info["detail"] or (text.splitlines()[0] if text else type(exc).__name__)
        record(key, False, title, msg)
        raise
    record(key, True, title, info["detail"])
