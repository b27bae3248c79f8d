from hypothesis import settings

# exact arithmetic on long continued fractions is slow enough to trip the default deadline
settings.register_profile("exact", deadline=None, max_examples=100)
settings.load_profile("exact")
