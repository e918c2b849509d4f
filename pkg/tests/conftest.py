from hypothesis import HealthCheck, settings

# wall-clock deadlines are flaky under load; correctness is what matters here
settings.register_profile(
    "np_atlas", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("np_atlas")
