"""2D-mesh platform model: geometry, XY routing, contention domains.

All durations are integer picoseconds.  Links are unidirectional and
directional identity is what decides contention: two flows crossing the
same physical channel in opposite directions never contend.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class ConfigurationError(ValueError):
    """Invalid platform parameters or out-of-model coordinates."""


class ModelViolationError(RuntimeError):
    """An internal assumption of the routing/contention model was broken."""


class Direction(Enum):
    NORTH = "N"
    SOUTH = "S"
    EAST = "E"
    WEST = "W"
    LOCAL = "local"


class LinkKind(Enum):
    CORE_TO_ROUTER = "core-to-router"
    ROUTER_TO_ROUTER = "router-to-router"
    ROUTER_TO_CORE = "router-to-core"


@dataclass(frozen=True)
class PlatformConfig:
    """Mesh geometry plus the timing constants of the router fabric.

    ``link_delay_ps`` is the time one flit needs to cross one link,
    ``router_delay_ps`` the per-router delay of a header flit.  Both must
    be positive integer multiples of ``clock_period_ps``.
    """

    rows: int = 8
    cols: int = 8
    flit_size: int = 16
    link_delay_ps: int = 500
    router_delay_ps: int = 1500
    clock_period_ps: int = 500

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ConfigurationError(f"mesh must be at least 1x1, got {self.rows}x{self.cols}")
        if self.flit_size < 1:
            raise ConfigurationError(f"flit size must be >= 1 byte, got {self.flit_size}")
        if self.clock_period_ps < 1:
            raise ConfigurationError("clock period must be positive")
        for name, value in (("link_delay_ps", self.link_delay_ps),
                            ("router_delay_ps", self.router_delay_ps)):
            if value < 1 or value % self.clock_period_ps:
                raise ConfigurationError(
                    f"{name}={value} is not a positive multiple of the "
                    f"{self.clock_period_ps} ps clock period")

    @property
    def link_delay_cycles(self) -> int:
        return self.link_delay_ps // self.clock_period_ps

    @property
    def router_delay_cycles(self) -> int:
        return self.router_delay_ps // self.clock_period_ps

    def in_bounds(self, tile: TileCoord) -> bool:
        return 0 <= tile.x < self.cols and 0 <= tile.y < self.rows


@dataclass(frozen=True)
class TileCoord:
    """Tile position: x is the column index, y the row index."""

    x: int
    y: int

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


@dataclass(frozen=True)
class Link:
    """One unidirectional link; (kind, src, dst, direction) is its identity."""

    kind: LinkKind
    src: TileCoord
    dst: TileCoord
    direction: Direction


@dataclass(frozen=True)
class Path:
    """An XY route as the ordered tuple of traversed links.

    The first link is the core-to-router injection link at the source
    tile, the last one the router-to-core ejection link at the
    destination; everything in between is router-to-router.  The number
    of traversed routers is ``len(links) - 1``.
    """

    links: tuple[Link, ...]

    def __len__(self) -> int:
        return len(self.links)

    @property
    def source(self) -> TileCoord:
        return self.links[0].src

    @property
    def destination(self) -> TileCoord:
        return self.links[-1].dst


@dataclass(frozen=True)
class PathDecomposition:
    """Split of a higher-priority path relative to a contending lower one.

    ``cd_len`` counts the links both paths share (the contention domain),
    ``pre_cd_len``/``post_cd_len`` the links of the higher-priority path
    before and after it.
    """

    pre_cd_len: int
    cd_len: int
    post_cd_len: int

    def __post_init__(self) -> None:
        if self.cd_len < 1:
            raise ModelViolationError("a decomposition needs a non-empty contention domain")
        if self.pre_cd_len < 0 or self.post_cd_len < 0:
            raise ModelViolationError("section lengths cannot be negative")

    @property
    def total_len(self) -> int:
        return self.pre_cd_len + self.cd_len + self.post_cd_len


def xy_route(src: TileCoord, dst: TileCoord, cfg: PlatformConfig) -> Path:
    """Return the unique XY path from src core to dst core.

    X movement is exhausted before Y movement.  Raises
    ConfigurationError for out-of-bounds tiles or src == dst (the model
    has no self-flows).
    """
    for tile in (src, dst):
        if not cfg.in_bounds(tile):
            raise ConfigurationError(f"tile {tile} outside the {cfg.cols}x{cfg.rows} mesh")
    if src == dst:
        raise ConfigurationError(f"flows need distinct endpoints, got src == dst == {src}")

    links = [Link(LinkKind.CORE_TO_ROUTER, src, src, Direction.LOCAL)]
    here = src
    step_x = 1 if dst.x > here.x else -1
    while here.x != dst.x:
        nxt = TileCoord(here.x + step_x, here.y)
        links.append(Link(LinkKind.ROUTER_TO_ROUTER, here, nxt,
                          Direction.EAST if step_x > 0 else Direction.WEST))
        here = nxt
    step_y = 1 if dst.y > here.y else -1
    while here.y != dst.y:
        nxt = TileCoord(here.x, here.y + step_y)
        links.append(Link(LinkKind.ROUTER_TO_ROUTER, here, nxt,
                          Direction.NORTH if step_y > 0 else Direction.SOUTH))
        here = nxt
    links.append(Link(LinkKind.ROUTER_TO_CORE, dst, dst, Direction.LOCAL))
    return Path(tuple(links))


def decompose(higher: Path, lower: Path) -> PathDecomposition | None:
    """Split ``higher`` into pre-CD / CD / post-CD relative to ``lower``.

    Returns None when the paths share no link.  XY routing guarantees
    that shared links form a single contiguous run along both paths; a
    non-contiguous overlap means a routing bug and raises
    ModelViolationError.
    """
    shared = set(higher.links) & set(lower.links)
    if not shared:
        return None
    positions = [i for i, link in enumerate(higher.links) if link in shared]
    first, last = positions[0], positions[-1]
    if last - first + 1 != len(positions):
        raise ModelViolationError(
            f"shared links of {higher.source}->{higher.destination} and "
            f"{lower.source}->{lower.destination} are not contiguous")
    return PathDecomposition(
        pre_cd_len=first,
        cd_len=len(positions),
        post_cd_len=len(higher) - 1 - last,
    )
