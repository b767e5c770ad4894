# hubwalk/data — published toy-graph reference tables
