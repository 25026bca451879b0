##################
# Process Status #
##################

# Every requested check passed.
VERIFY_PASSED = 0

# At least one verification check failed.
VERIFY_FAILED = 1

# Invalid command line or input outside the supported domain.
USAGE_ERROR = 2
