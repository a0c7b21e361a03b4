# Pydantic domain models, API requests/responses and the benchmark table
