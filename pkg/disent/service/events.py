from dataclasses import dataclass


@dataclass
class Event:
    pass


@dataclass
class CheckPassed(Event):
    name: str
    deviation: float
    bound: float


@dataclass
class CheckFailed(Event):
    name: str
    deviation: float
    bound: float
