var o = new Object();
// A new function is attached to 'o' on property 'f'
o.f = function() {return this;};

// f is invoked from o, so 'this' is bound to 'o'
o.f(); // answers {f: function}
o.f() === o; // answers true

var o2 = new Object();

// o2.f and o.f point to the same function object
o2.f = o.f;

// f is invoked from o2, so 'this' is bound to 'o2'
o2.f() === o2; // answers true
o2.f() === o; // answers false
