from .subuniverse import ElementSet
from .subuniverse import SubuniverseClass
from .subuniverse import all_subuniverses
from .subuniverse import classes_that_are_subuniverses
from .subuniverse import generated_subuniverse
from .subuniverse import has_closed_class_property
from .subuniverse import is_subuniverse
from .subuniverse import nontrivial_closed_classes
from .subuniverse import sort_element_sets
from .subuniverse import subalgebra


__all__ = [
    "ElementSet",
    "SubuniverseClass",
    "all_subuniverses",
    "classes_that_are_subuniverses",
    "generated_subuniverse",
    "has_closed_class_property",
    "is_subuniverse",
    "nontrivial_closed_classes",
    "sort_element_sets",
    "subalgebra",
]
