var propertyA = 'property';
var someGlobal = 'pilou';
var obj = new Object();
obj.propertyA = 1;

with (obj) {
    someGlobal = propertyA; // 'propertyA' is the property of obj
};

someGlobal; // answers 1
