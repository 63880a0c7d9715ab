# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
This module defines a central registry for verification check providers.

The `CheckRegistry` instantiates every provider with the services container,
collects the checks each provider derives from the caches present, and runs a
selection of them.
"""
import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Callable, List, Optional, Tuple, Type

from siegel_traces.models.report_models import CheckResult

if TYPE_CHECKING:
    from siegel_traces.app_services import AppServices

logger = logging.getLogger(__name__)


@dataclass
class Check:
    """A named, deferred verification; run() may report several results."""
    name: str
    run: Callable[[], List[CheckResult]] = field(repr=False)
    tags: Tuple[str, ...] = ()


class BaseCheckProvider:
    """
    Abstract base class for a class that provides checks.
    This helps with type hinting and structure.
    """
    group: str = "checks"

    def __init__(self, services: "AppServices" = None):
        self.services = services

    def get_checks(self) -> List[Check]:
        raise NotImplementedError


class CheckRegistry:
    """
    A registry to manage the collection and initialization of check providers.
    """

    def __init__(self, services: "AppServices"):
        self.services = services
        self._providers: List[BaseCheckProvider] = []
        self._checks: List[Check] = []

    def register_provider(self, provider_class: Type[BaseCheckProvider]):
        """
        Initializes and registers a check provider.
        The provider class is instantiated with the services container.
        """
        if not issubclass(provider_class, BaseCheckProvider):
            logger.warning(
                f"Class {provider_class.__name__} does not inherit from BaseCheckProvider. "
                "Registration might not work as expected."
            )

        provider_instance = provider_class(services=self.services)
        self._providers.append(provider_instance)
        new_checks = provider_instance.get_checks()
        self._checks.extend(new_checks)
        logger.info(f"Registered {len(new_checks)} checks from {provider_class.__name__}.")

    def get_all_checks(self) -> List[Check]:
        """
        Returns a flat list of all checks from all registered providers.
        """
        return self._checks

    def run(self, select: Optional[Callable[[Check], bool]] = None) -> List[CheckResult]:
        results: List[CheckResult] = []
        for check in self._checks:
            if select is not None and not select(check):
                continue
            logger.debug(f"Running check {check.name}.")
            results.extend(check.run())
        failed = [r.name for r in results if r.gated and not r.passed]
        logger.info(f"Ran {len(results)} checks, {len(failed)} gated failures.")
        return results
