"""REPL - Interactive move session built from event driven components."""

# Programmed by CoolCat467

from __future__ import annotations

# Copyright (C) 2023-2025  CoolCat467
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License as
# published by the Free Software Foundation, either version 3 of the
# License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public
# License along with this program.  If not, see
# <https://www.gnu.org/licenses/>.

__title__ = "REPL"
__author__ = "CoolCat467"
__license__ = "GNU Lesser General Public License Version 3"

import logging
import shlex
import sys
from typing import TYPE_CHECKING, Any, Final, Generic, NamedTuple, TypeVar
from weakref import ref

import trio

from lefschetzcalc.catalog import CatalogError, build_named
from lefschetzcalc.documents import (
    DocumentError,
    dumps,
    fibration_to_document,
    load_fibration,
    report_text,
)
from lefschetzcalc.fibration_calculus import (
    AbstractLF,
    IllegalMoveError,
    Mode,
    Move,
    apply_move,
    canonical_key,
    format_cycle,
    legal_moves,
)
from lefschetzcalc.search import DEFAULT_BLOCK_SEARCH_BUDGET, SearchBudget

if TYPE_CHECKING:
    from collections.abc import AsyncIterable, Awaitable, Callable

logger = logging.getLogger(__name__)

T_co = TypeVar("T_co", covariant=True)

COMMANDS: Final = {
    "load": "load PATH | load NAME k=.. m=.. i=.. j=.. n=..",
    "show": "show the current fibration",
    "moves": "list legal moves",
    "apply": "apply N, the N-th listed legal move",
    "undo": "restore the previous state",
    "invariants": "print the invariant report",
    "save": "save PATH, write the current fibration",
    "key": "print the canonical key in hex",
    "help": "list commands",
    "quit": "end the session",
}

USER_ERRORS: Final = (
    CatalogError,
    DocumentError,
    IllegalMoveError,
    OSError,
    ValueError,
)


class Event(Generic[T_co]):
    """Event with name and data."""

    __slots__ = ("data", "name")

    def __init__(self, name: str, data: T_co) -> None:
        """Initialize event."""
        self.name = name
        self.data = data

    def __repr__(self) -> str:
        """Return representation of self."""
        return f"{self.__class__.__name__}({self.name!r}, {self.data!r})"


class Component:
    """Named part of a session bound to a manager."""

    __slots__ = ("__manager", "name")

    def __init__(self, name: str) -> None:
        """Initialise with name."""
        self.name = name
        self.__manager: ref[ComponentManager] | None = None

    def __repr__(self) -> str:
        """Return representation of self."""
        return f"{self.__class__.__name__}({self.name!r})"

    @property
    def manager(self) -> ComponentManager:
        """ComponentManager if bound to one, otherwise raise AttributeError."""
        if self.__manager is not None:
            manager = self.__manager()
            if manager is not None:
                return manager
        raise AttributeError(f"No component manager bound for {self.name}")

    @property
    def manager_exists(self) -> bool:
        """Return if manager is bound or not."""
        return self.__manager is not None and self.__manager() is not None

    def bind(self, manager: ComponentManager) -> None:
        """Bind self to manager.

        Raises RuntimeError if component is already bound to a manager.
        """
        if self.manager_exists:
            raise RuntimeError(
                f"{self.name} component is already bound to {self.manager}",
            )
        self.__manager = ref(manager)
        self.bind_handlers()

    def bind_handlers(self) -> None:
        """Add handlers in subclass."""

    def register_handler(
        self,
        event_name: str,
        handler_coro: Callable[[Event[Any]], Awaitable[Any]],
    ) -> None:
        """Register handler with bound component manager."""
        self.manager.register_component_handler(
            event_name,
            handler_coro,
            self.name,
        )

    def get_component(self, component_name: str) -> Any:
        """Get Component from manager."""
        return self.manager.get_component(component_name)

    async def raise_event(self, event: Event[Any]) -> None:
        """Raise event for bound manager."""
        await self.manager.raise_event(event)


class ComponentManager(Component):
    """Dispatches events to the handlers of bound components."""

    __slots__ = ("__components", "__event_handlers", "__weakref__")

    def __init__(self, name: str) -> None:
        """Initialise with name and no components."""
        super().__init__(name)
        self.__event_handlers: dict[
            str,
            list[tuple[Callable[[Event[Any]], Awaitable[Any]], str]],
        ] = {}
        self.__components: dict[str, Component] = {}

    def register_component_handler(
        self,
        event_name: str,
        handler_coro: Callable[[Event[Any]], Awaitable[Any]],
        component_name: str,
    ) -> None:
        """Register handler_coro as handler for event_name.

        Raises ValueError if no component with given name is registered.
        """
        if (
            component_name != self.name
            and component_name not in self.__components
        ):
            raise ValueError(
                f"Component named {component_name!r} is not registered!",
            )
        self.__event_handlers.setdefault(event_name, []).append(
            (handler_coro, component_name),
        )

    def register_handler(
        self,
        event_name: str,
        handler_coro: Callable[[Event[Any]], Awaitable[Any]],
    ) -> None:
        """Register handler for event_name as this manager."""
        self.register_component_handler(event_name, handler_coro, self.name)

    def has_handler(self, event_name: str) -> bool:
        """Return if there are event handlers registered for a given event."""
        return bool(self.__event_handlers.get(event_name))

    async def raise_event(self, event: Event[Any]) -> None:
        """Run every handler of event, in registration order."""
        for handler, _name in self.__event_handlers.get(event.name, ()):
            await handler(event)

    def add_component(self, component: Component) -> None:
        """Add component to this manager.

        Raises ValueError if component already exists with component name.
        """
        if self.component_exists(component.name):
            raise ValueError(
                f'Component named "{component.name}" already exists!',
            )
        self.__components[component.name] = component
        component.bind(self)

    def add_components(self, components: tuple[Component, ...]) -> None:
        """Add multiple components to this manager."""
        for component in components:
            self.add_component(component)

    def component_exists(self, component_name: str) -> bool:
        """Return if component exists in this manager."""
        return component_name in self.__components

    def get_component(self, component_name: str) -> Any:
        """Return Component or raise ValueError because it doesn't exist."""
        if not self.component_exists(component_name):
            raise ValueError(f'"{component_name}" component does not exist')
        return self.__components[component_name]


class Command(NamedTuple):
    """Parsed command line."""

    name: str
    arguments: tuple[str, ...]


def parse_command(line: str) -> Command | None:
    """Return command from input line, None for blank lines."""
    words = shlex.split(line, comments=True)
    if not words:
        return None
    return Command(words[0].lower(), tuple(words[1:]))


def parse_parameters(arguments: tuple[str, ...]) -> dict[str, str]:
    """Return key=value arguments as a dict.

    Raises ValueError on an argument without ``=``.
    """
    parameters = {}
    for argument in arguments:
        key, sep, value = argument.partition("=")
        if not sep:
            raise ValueError(f"Expected key=value, got {argument!r}")
        parameters[key.lower()] = value
    return parameters


def _optional_int(parameters: dict[str, str], key: str) -> int | None:
    value = parameters.get(key)
    return None if value is None else int(value)


class Console(Component):
    """Collects session output and forwards it to a writer."""

    __slots__ = ("lines", "writer")

    def __init__(self, writer: Callable[[str], object] | None = None) -> None:
        """Initialise with optional writer called for every line."""
        super().__init__("console")
        self.writer = writer
        self.lines: list[str] = []

    def write(self, text: str) -> None:
        """Record text and pass it to the writer."""
        for line in text.splitlines() or [""]:
            self.lines.append(line)
            if self.writer is not None:
                self.writer(line)


class SessionState(Component):
    """Current fibration, mode and history of applied moves."""

    __slots__ = ("fibration", "history", "mode")

    def __init__(self, mode: Mode) -> None:
        """Initialise with no fibration loaded."""
        super().__init__("state")
        self.mode = mode
        self.fibration: AbstractLF | None = None
        self.history: list[tuple[AbstractLF, Move]] = []

    def bind_handlers(self) -> None:
        """Register command handlers."""
        self.register_handler("show", self.handle_show)
        self.register_handler("moves", self.handle_moves)
        self.register_handler("apply", self.handle_apply)
        self.register_handler("undo", self.handle_undo)
        self.register_handler("key", self.handle_key)

    @property
    def console(self) -> Console:
        """Session console."""
        console: Console = self.get_component("console")
        return console

    def replace(self, fibration: AbstractLF) -> None:
        """Start over from a new fibration."""
        self.fibration = fibration
        self.history.clear()

    def require(self) -> AbstractLF:
        """Return current fibration.

        Raises ValueError if nothing is loaded.
        """
        if self.fibration is None:
            raise ValueError("nothing loaded, use load first")
        return self.fibration

    def describe(self) -> str:
        """Return multi line description of the current fibration."""
        f = self.require()
        edges = " ".join(f"{a}-{b}" for a, b in f.fiber.canonical_edges())
        lines = [
            f"n={f.sphere_dim} vertices={f.fiber.vertex_count} "
            f"edges=[{edges}] mode={self.mode.value}",
        ]
        lines.extend(
            f"  {position}: {format_cycle(cycle)}"
            for position, cycle in enumerate(f.cycles, start=1)
        )
        return "\n".join(lines)

    async def handle_show(self, event: Event[Command]) -> None:
        """Print current fibration."""
        self.console.write(self.describe())

    async def handle_moves(self, event: Event[Command]) -> None:
        """Print numbered legal moves."""
        moves = legal_moves(self.require(), self.mode)
        self.console.write(
            "\n".join(
                f"{number}: {move.describe()}"
                for number, move in enumerate(moves, start=1)
            ),
        )

    async def handle_apply(self, event: Event[Command]) -> None:
        """Apply the N-th legal move."""
        if len(event.data.arguments) != 1:
            raise ValueError("usage: apply N")
        number = int(event.data.arguments[0])
        current = self.require()
        moves = legal_moves(current, self.mode)
        if not 1 <= number <= len(moves):
            raise ValueError(f"move number must be in 1..{len(moves)}")
        move = moves[number - 1]
        self.fibration = apply_move(current, move, self.mode)
        self.history.append((current, move))
        logger.debug("applied %s", move)
        self.console.write(f"applied {move.describe()}")

    async def handle_undo(self, event: Event[Command]) -> None:
        """Restore the state before the last applied move."""
        if not self.history:
            raise ValueError("nothing to undo")
        previous, move = self.history.pop()
        self.fibration = previous
        self.console.write(f"undid {move.describe()}")

    async def handle_key(self, event: Event[Command]) -> None:
        """Print canonical key."""
        self.console.write(canonical_key(self.require()).hex())


class InvariantsPanel(Component):
    """Prints invariant reports of the current fibration."""

    __slots__ = ("budget",)

    def __init__(self, budget: SearchBudget) -> None:
        """Initialise with block search budget."""
        super().__init__("invariants")
        self.budget = budget

    def bind_handlers(self) -> None:
        """Register command handlers."""
        self.register_handler("invariants", self.handle_invariants)

    async def handle_invariants(self, event: Event[Command]) -> None:
        """Print report document of the current fibration."""
        state: SessionState = self.get_component("state")
        console: Console = self.get_component("console")
        console.write(report_text(state.require(), self.budget).rstrip())


class Storage(Component):
    """Loads and saves fibration documents."""

    __slots__ = ()

    def __init__(self) -> None:
        """Initialise storage component."""
        super().__init__("storage")

    def bind_handlers(self) -> None:
        """Register command handlers."""
        self.register_handler("load", self.handle_load)
        self.register_handler("save", self.handle_save)

    async def handle_load(self, event: Event[Command]) -> None:
        """Load a document file or build a catalog target."""
        arguments = event.data.arguments
        if not arguments:
            raise ValueError("usage: load PATH | load NAME key=value ...")
        path = trio.Path(arguments[0])
        if len(arguments) == 1 and await path.is_file():
            fibration = load_fibration(await path.read_bytes())
        else:
            parameters = parse_parameters(arguments[1:])
            fibration = build_named(
                arguments[0],
                int(parameters.get("n", "2")),
                k=_optional_int(parameters, "k"),
                m=_optional_int(parameters, "m"),
                i=tuple(
                    int(part)
                    for part in parameters.get("i", "").split(",")
                    if part
                ),
                j=_optional_int(parameters, "j"),
                kind=parameters.get("kind"),
            )
        state: SessionState = self.get_component("state")
        state.replace(fibration)
        console: Console = self.get_component("console")
        console.write(f"loaded {fibration.cycle_count} cycles")

    async def handle_save(self, event: Event[Command]) -> None:
        """Write current fibration document."""
        if len(event.data.arguments) != 1:
            raise ValueError("usage: save PATH")
        state: SessionState = self.get_component("state")
        text = dumps(fibration_to_document(state.require()))
        await trio.Path(event.data.arguments[0]).write_text(
            text,
            encoding="utf-8",
        )
        console: Console = self.get_component("console")
        console.write(f"saved {event.data.arguments[0]}")


class ReplSession(ComponentManager):
    """Line oriented session over one fibration and its move history."""

    __slots__ = ("running",)

    def __init__(
        self,
        writer: Callable[[str], object] | None = None,
        mode: Mode = Mode.WEINSTEIN,
        budget: SearchBudget = DEFAULT_BLOCK_SEARCH_BUDGET,
    ) -> None:
        """Initialise session components."""
        super().__init__("session")
        self.running = True
        self.add_components(
            (
                Console(writer),
                SessionState(mode),
                InvariantsPanel(budget),
                Storage(),
            ),
        )
        self.register_handler("help", self.handle_help)
        self.register_handler("quit", self.handle_quit)

    @property
    def console(self) -> Console:
        """Session console."""
        console: Console = self.get_component("console")
        return console

    @property
    def state(self) -> SessionState:
        """Session state component."""
        state: SessionState = self.get_component("state")
        return state

    async def handle_help(self, event: Event[Command]) -> None:
        """Print command summary."""
        self.console.write(
            "\n".join(f"{name:<11}{text}" for name, text in COMMANDS.items()),
        )

    async def handle_quit(self, event: Event[Command]) -> None:
        """Stop the session."""
        self.running = False

    async def handle_line(self, line: str) -> bool:
        """Run one input line and return if the session continues."""
        try:
            command = parse_command(line)
        except ValueError as exc:
            self.console.write(f"error: {exc}")
            return self.running
        if command is None:
            return self.running
        if not self.has_handler(command.name):
            self.console.write(
                f"unknown command {command.name!r}, try help",
            )
            return self.running
        try:
            await self.raise_event(Event(command.name, command))
        except USER_ERRORS as exc:
            self.console.write(f"error: {exc}")
        return self.running


async def run_session(
    lines: AsyncIterable[str],
    session: ReplSession,
    prompt: str = "",
) -> ReplSession:
    """Feed lines to session until they run out or quit is entered."""
    async for line in lines:
        if not await session.handle_line(line.rstrip("\n")):
            break
        if prompt:
            session.console.write(prompt)
    return session


async def run_stdin_session(
    mode: Mode = Mode.WEINSTEIN,
    budget: SearchBudget = DEFAULT_BLOCK_SEARCH_BUDGET,
) -> ReplSession:
    """Run a session reading standard input and printing to stdout."""
    session = ReplSession(print, mode, budget)
    session.console.write("lefschetzcalc repl, type help for commands")
    return await run_session(trio.wrap_file(sys.stdin), session)


if __name__ == "__main__":  # pragma: nocover
    print(f"{__title__}\nProgrammed by {__author__}.")
