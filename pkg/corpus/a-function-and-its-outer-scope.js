function outerFunction(obj){
    var localToOuterFunction = 0;
    var innerFunction = function(){
        localToOuterFunction++;
        obj.someProperty = localToOuterFunction;
    }
    return innerFunction;
}
o = new Object();
returnedFunction = outerFunction(o);
returnedFunction();
returnedFunction();
o.someProperty // answers 2

o2 = new Object();
returnedFunction = outerFunction(o2);
returnedFunction();
o2.someProperty // answers 1
o.someProperty // answers 2
