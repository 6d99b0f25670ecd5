from .resource_limit_solution import ResourceLimitSolution
