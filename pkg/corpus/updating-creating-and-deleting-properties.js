// Updating a property
var obj = {a: 0};
obj['a'] = 10;
obj // answers {a: 10}

// Creating a new property using the same syntax
var obj2 = {a: 0};
obj2['b'] = 10;
obj2 // answers {a: 0, b: 10}

// Deleting a property
var obj3 = {a: 0, b: 5};
delete obj3['b'];
obj3 // answers {a: 0}

delete {a: 0, b: 5}['b']; // answers true
