from sympow.resurgence.engine import ResurgenceEngine
from sympow.resurgence.types import AsymptoticResurgence, ResurgenceResult, ResurgenceStatus

__all__ = ["AsymptoticResurgence", "ResurgenceEngine", "ResurgenceResult", "ResurgenceStatus"]
