import json
import os
import threading
from abc import ABC, abstractmethod
from typing import Any, Dict, List

import sqlalchemy
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from tendonplan.errors import WearFileError
from tendonplan.utils import logger
from tendonplan.wear.wear_state import NUM_MOTORS, WearState

SQL_SUFFIXES = (".db", ".sqlite", ".sqlite3")


class SegmentRecord(BaseModel):
    section: int
    a: int
    b: int
    count: int = Field(ge=0)

    model_config = ConfigDict(extra="forbid")


class WearDocument(BaseModel):
    """On-disk schema shared by every wear store."""

    motors: Dict[str, int]
    segments: List[SegmentRecord] = Field(default_factory=list)

    model_config = ConfigDict(extra="forbid")


def _record_name(loc: tuple) -> str:
    name = ""
    for part in loc:
        name += f"[{part}]" if isinstance(part, int) else (f".{part}" if name else str(part))
    return name or "document"


def to_document(state: WearState) -> Dict[str, Any]:
    return {
        "motors": {str(m): steps for m, steps in sorted(state.motor_steps.items())},
        "segments": [
            {"section": section, "a": a, "b": b, "count": count}
            for (section, a, b), count in sorted(state.segment_use.items())
        ],
    }


def from_document(data: Any, locator: str) -> WearState:
    """Validate a parsed document; errors name the offending record."""
    try:
        doc = WearDocument.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise WearFileError(locator, _record_name(first["loc"]), first["msg"]) from e

    motors = {m: 0 for m in range(NUM_MOTORS)}
    for key, steps in doc.motors.items():
        if not key.isdigit() or int(key) not in motors:
            raise WearFileError(locator, f"motors.{key}", f"motor id must be 0..{NUM_MOTORS - 1}")
        if steps < 0:
            raise WearFileError(locator, f"motors.{key}", "step count must be non-negative")
        motors[int(key)] = steps

    segments = {}
    for index, record in enumerate(doc.segments):
        key = (record.section, record.a, record.b)
        if key in segments:
            raise WearFileError(locator, f"segments[{index}]", "duplicate segment")
        try:
            WearState(segment_use={key: record.count})
        except ValidationError as e:
            raise WearFileError(locator, f"segments[{index}]", e.errors()[0]["msg"]) from e
        segments[key] = record.count
    return WearState(motor_steps=motors, segment_use=segments)


class WearStore(ABC):
    """Persistent home of a WearState. Stores expect a single writer."""

    def __init__(self, locator: str):
        self.locator = locator

    @abstractmethod
    def load(self) -> WearState:
        """
        Read the stored wear.

        Returns:
            WearState: The stored state, or the all-zero state when nothing is stored yet.

        Raises:
            WearFileError: If the stored data does not match the schema.
        """
        pass

    @abstractmethod
    def save(self, state: WearState) -> None:
        pass


class JsonWearStore(WearStore):
    def load(self) -> WearState:
        if not os.path.exists(self.locator):
            logger.debug("wear.absent", locator=self.locator)
            return WearState.zero()
        with open(self.locator, "r", encoding="utf-8") as f:
            text = f.read()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise WearFileError(self.locator, "document", str(e)) from e
        state = from_document(data, self.locator)
        logger.info("wear.loaded", locator=self.locator, total_steps=state.total_steps)
        return state

    def save(self, state: WearState) -> None:
        with open(self.locator, "w", encoding="utf-8") as f:
            f.write(dumps(state))
        logger.info("wear.saved", locator=self.locator, total_steps=state.total_steps)


metadata = sqlalchemy.MetaData()

motors_table = sqlalchemy.Table(
    "motors",
    metadata,
    sqlalchemy.Column("motor_id", sqlalchemy.Integer, primary_key=True),
    sqlalchemy.Column("steps", sqlalchemy.Integer, nullable=False),
)

segments_table = sqlalchemy.Table(
    "segments",
    metadata,
    sqlalchemy.Column("section", sqlalchemy.Integer, primary_key=True),
    sqlalchemy.Column("a", sqlalchemy.Integer, primary_key=True),
    sqlalchemy.Column("b", sqlalchemy.Integer, primary_key=True),
    sqlalchemy.Column("count", sqlalchemy.Integer, nullable=False),
)


class EngineRegistry:
    """
    Hands out one SQLAlchemy engine per database URL.

    Engines own connection pools, so they are created once and reused across
    the application.
    """

    _engines: Dict[str, sqlalchemy.engine.Engine] = {}
    _lock = threading.Lock()

    def __init__(self):
        raise RuntimeError("Call get_engine() instead")

    @classmethod
    def get_engine(cls, db_url: str) -> sqlalchemy.engine.Engine:
        engine = cls._engines.get(db_url)
        if engine is None:
            with cls._lock:
                engine = cls._engines.get(db_url)
                if engine is None:
                    engine = sqlalchemy.create_engine(db_url)
                    cls._engines[db_url] = engine
        return engine


class SqlWearStore(WearStore):
    """Wear kept in a relational database (sqlite by default) with two tables."""

    def _missing_sqlite_file(self) -> bool:
        url = sqlalchemy.engine.make_url(self.locator)
        database = url.database
        return (
            url.drivername.startswith("sqlite")
            and database not in (None, "", ":memory:")
            and not os.path.exists(database)
        )

    def load(self) -> WearState:
        if self._missing_sqlite_file():
            return WearState.zero()
        engine = EngineRegistry.get_engine(self.locator)
        inspector = sqlalchemy.inspect(engine)
        if not inspector.has_table(motors_table.name):
            return WearState.zero()
        with engine.connect() as connection:
            motors = connection.execute(
                sqlalchemy.select(motors_table).order_by(motors_table.c.motor_id)
            ).all()
            segments = connection.execute(
                sqlalchemy.select(segments_table).order_by(
                    segments_table.c.section, segments_table.c.a, segments_table.c.b
                )
            ).all()
        # Row.count is the tuple method, so columns are read through the mapping view.
        data = {
            "motors": {str(row.motor_id): row.steps for row in motors},
            "segments": [dict(row._mapping) for row in segments],
        }
        state = from_document(data, self.locator)
        logger.info("wear.loaded", locator=self.locator, total_steps=state.total_steps)
        return state

    def save(self, state: WearState) -> None:
        engine = EngineRegistry.get_engine(self.locator)
        metadata.create_all(engine)
        doc = to_document(state)
        with engine.begin() as connection:
            connection.execute(sqlalchemy.delete(segments_table))
            connection.execute(sqlalchemy.delete(motors_table))
            connection.execute(
                sqlalchemy.insert(motors_table),
                [{"motor_id": int(m), "steps": s} for m, s in doc["motors"].items()],
            )
            if doc["segments"]:
                connection.execute(sqlalchemy.insert(segments_table), doc["segments"])
        logger.info("wear.saved", locator=self.locator, total_steps=state.total_steps)


def dumps(state: WearState) -> str:
    """Canonical JSON text of a wear state."""
    return json.dumps(to_document(state), indent=2) + "\n"


def open_store(locator: str) -> WearStore:
    """Pick a store backend: database URLs and sqlite files go to SQL, anything else is JSON."""
    if "://" in locator:
        return SqlWearStore(locator)
    if locator.endswith(SQL_SUFFIXES):
        return SqlWearStore(f"sqlite:///{locator}")
    return JsonWearStore(locator)


def load(path: str) -> WearState:
    return open_store(path).load()


def save(state: WearState, path: str) -> None:
    open_store(path).save(state)
