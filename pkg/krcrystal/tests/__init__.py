global_data = dict()
