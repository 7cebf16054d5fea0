function someGlobalFunction(value1, value2){
    this.value1 = value1;
    this.value2 = value2;
}

// The regular invocation binds 'this' to the global object

someGlobalFunction(5,6);
window.value1 // answers 5

var someObject = new Object();
someGlobalFunction.call(someObject, 5, 6);
someObject.value1 // answers 5

someGlobalFunction.apply(someObject, [5, 6]); // equivalent
someObject.value2 // answers 6
