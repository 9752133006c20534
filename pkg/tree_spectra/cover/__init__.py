"""Maximum matchings and minimum vertex covers of trees."""
