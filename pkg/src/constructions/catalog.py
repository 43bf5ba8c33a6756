"""
Catalog of known nonisomorphic pairs with isomorphic connected P_3-graphs.
"""

import json
import logging
from pathlib import Path
from typing import Callable, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field

from src.graph_core.graph import Graph
from .bipartite import bipartite_pair, special_bipartite_spec
from .named import named_graph
from .schema import InflatedPair, ThornAssignment
from .whitney import whitney_pair

logger = logging.getLogger(__name__)

DEFAULT_CATALOG_PATH = Path(__file__).resolve().parents[2] / "data" / "fixtures" / "known_pairs.json"


class FixtureRecipe(BaseModel):
    """How to regenerate one known pair."""
    id: str
    family: Literal["whitney", "bipartite"]
    whitney_type: Optional[int] = Field(None, ge=3, le=6)
    thorns: List[int] = Field(default_factory=list)
    widths: List[int]
    base: Optional[str] = Field(None, description="Named base family for the bipartite type")
    base_params: List[int] = Field(default_factory=list)


def build_fixture(recipe: FixtureRecipe) -> InflatedPair:
    """Run the generator a recipe names."""
    if recipe.family == "whitney":
        if recipe.whitney_type is None:
            raise ValueError(f"fixture {recipe.id}: whitney recipes need whitney_type")
        return whitney_pair(recipe.whitney_type, ThornAssignment(values=tuple(recipe.thorns)), recipe.widths)
    if recipe.base is None:
        raise ValueError(f"fixture {recipe.id}: bipartite recipes need a base family")
    base = named_graph(recipe.base, *recipe.base_params)
    return bipartite_pair(special_bipartite_spec(base, recipe.widths))


class FixtureCatalog:
    """Known pairs, loaded from JSON or the built-in list."""

    def __init__(self, catalog_path: Optional[Union[str, Path]] = None):
        """
        Initialize the catalog.

        Args:
            catalog_path: Optional JSON file; the bundled data/fixtures file when omitted
        """
        self.recipes: List[FixtureRecipe] = []
        path = Path(catalog_path) if catalog_path else DEFAULT_CATALOG_PATH
        if path.exists():
            self.load_from_file(path)
        else:
            logger.warning("fixture catalog %s not found, using built-in recipes", path)
            self._builtin_recipes()

    def load_from_file(self, file_path: Union[str, Path]) -> None:
        with open(file_path, "r") as f:
            data = json.load(f)
        self.recipes = [FixtureRecipe(**entry) for entry in data.get("pairs", [])]
        logger.debug("loaded %d fixture recipes from %s", len(self.recipes), file_path)

    def _builtin_recipes(self) -> None:
        self.recipes = [
            FixtureRecipe(id="special-whitney", family="whitney", whitney_type=3,
                          thorns=[0, 0, 0, 0], widths=[1, 1, 1]),
            FixtureRecipe(id="special-bipartite-k12", family="bipartite", base="star",
                          base_params=[2], widths=[1, 1]),
        ]

    def build_all(self) -> Dict[str, InflatedPair]:
        return {recipe.id: build_fixture(recipe) for recipe in self.recipes}

    def member_keys(self, canon: Callable[[Graph], str]) -> Dict[Tuple[str, str], str]:
        """
        Map each fixture's sorted pair of canonical tokens to its id.

        Args:
            canon: Callable Graph -> canonical graph6 token
        """
        keys: Dict[Tuple[str, str], str] = {}
        for fixture_id, pair in self.build_all().items():
            first, second = sorted((canon(pair.first.graph), canon(pair.second.graph)))
            keys[(first, second)] = fixture_id
        return keys
