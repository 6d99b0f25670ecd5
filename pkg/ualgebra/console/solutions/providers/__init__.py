from .resource_limit_solution_provider import ResourceLimitSolutionProvider
