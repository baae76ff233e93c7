"""Process-wide registry for shared instances such as the active settings.

Pure computations never read from here; only entry points and their
helpers resolve configuration through it.
"""

import logging
from collections.abc import Callable
from typing import Any, ClassVar, Optional, TypeVar, cast

logger = logging.getLogger(__name__)

T = TypeVar("T")


class ServiceLocator:
    """Name-keyed registry of lazily created singletons."""

    _instance: ClassVar[Optional["ServiceLocator"]] = None
    _services: ClassVar[dict[str, Any]] = {}

    def __new__(cls) -> "ServiceLocator":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    @classmethod
    def register(cls: type["ServiceLocator"], name: str, instance: Any) -> None:
        cls._services[name] = instance
        logger.debug(f"registered {name!r} ({type(instance).__name__})")

    @classmethod
    def get(
        cls: type["ServiceLocator"],
        name: str,
        factory_func: Optional[Callable[[], Any]] = None,
    ) -> Any:
        """Look ``name`` up, building and caching it with ``factory_func`` on a miss.

        Raises:
            KeyError: nothing is registered and no factory was given
        """
        try:
            return cls._services[name]
        except KeyError:
            if factory_func is None:
                raise KeyError(f"nothing registered under {name!r}") from None
        instance = factory_func()
        cls.register(name, instance)
        return instance

    @classmethod
    def get_typed(
        cls: type["ServiceLocator"],
        name: str,
        expected_type: type[T],
        factory_func: Optional[Callable[[], Any]] = None,
    ) -> T:
        instance = cls.get(name, factory_func)
        if not isinstance(instance, expected_type):
            raise TypeError(
                f"{name!r} holds a {type(instance).__name__}, not a {expected_type.__name__}"
            )
        return cast("T", instance)

    @classmethod
    def clear(cls: type["ServiceLocator"]) -> None:
        """Forget every instance; the next lookup rebuilds it."""
        cls._services.clear()


service_locator = ServiceLocator()
